/*!
  \file consequence.hpp
  \brief Sequent validity under CL, SS, TT, ST and TS by exhaustive model enumeration
*/

#pragma once

#include <bridgelab/formula.hpp>
#include <bridgelab/semantics.hpp>
#include <bridgelab/truth_value.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bridgelab
{

class cap_exceeded : public std::runtime_error
{
public:
  cap_exceeded( std::size_t atoms, std::size_t cap )
      : std::runtime_error( "enumeration needs " + std::to_string( atoms ) + " free atoms, cap is " +
                            std::to_string( cap ) ),
        atoms( atoms ),
        cap( cap )
  {
  }

  std::size_t atoms;
  std::size_t cap;
};

inline constexpr std::size_t default_atom_cap = 16;

/*! \brief Consequence relations, named by premise/conclusion standard. */
enum class relation
{
  cl, /* classical valuations only */
  ss, /* strict to strict (K3) */
  tt, /* tolerant to tolerant (LP) */
  st, /* strict to tolerant */
  ts  /* tolerant to strict */
};

inline constexpr std::array<relation, 5> all_relations{ relation::cl, relation::ss, relation::tt, relation::st,
                                                        relation::ts };

inline std::string_view to_string( relation r )
{
  switch ( r )
  {
  case relation::cl:
    return "cl";
  case relation::ss:
    return "ss";
  case relation::tt:
    return "tt";
  case relation::st:
    return "st";
  case relation::ts:
  default:
    return "ts";
  }
}

inline std::optional<relation> parse_relation( std::string_view text )
{
  for ( auto r : all_relations )
  {
    auto const name = to_string( r );
    if ( text.size() == name.size() &&
         std::equal( text.begin(), text.end(), name.begin(),
                     []( char a, char b ) { return std::tolower( static_cast<unsigned char>( a ) ) == b; } ) )
      return r;
  }
  return std::nullopt;
}

constexpr designation premise_standard( relation r )
{
  return ( r == relation::tt || r == relation::ts ) ? designation::tolerant : designation::strict;
}

constexpr designation conclusion_standard( relation r )
{
  return ( r == relation::tt || r == relation::st ) ? designation::tolerant : designation::strict;
}

constexpr bool is_classical( relation r ) { return r == relation::cl; }

/*! \brief Default family: the LP reading of the Bridge trees wants the Cooper conditional. */
constexpr connective_family default_family( relation r )
{
  return r == relation::tt ? connective_family::cooper : connective_family::strong_kleene;
}

struct signature
{
  /* quantifier range; empty means "constants of the formulas" */
  std::set<std::string> domain;
  /* background facts held fixed across the enumeration */
  std::map<std::string, truth_value> fixed;
};

/*! \brief Hypothetical premise `[assumptions ⊢ conclusion]` of a metainference. */
struct hypothetical
{
  std::vector<formula> assumptions;
  formula conclusion;
};

/*! \brief Sequent `premises ⊢ conclusion` over a signature.

  Non-empty `hypotheticals` make it a local metainference: a model refutes it
  when it designates every premise, satisfies every hypothetical (if it
  designates the assumptions it designates that conclusion), and still fails
  to designate the conclusion.
*/
struct sequent
{
  std::vector<formula> premises;
  formula conclusion;
  signature sig;
  quotation_context ctx;
  bool transparent = false;
  std::vector<hypothetical> hypotheticals;

  std::vector<formula> all_formulas() const
  {
    std::vector<formula> out = premises;
    out.push_back( conclusion );
    for ( auto const& h : hypotheticals )
    {
      out.insert( out.end(), h.assumptions.begin(), h.assumptions.end() );
      out.push_back( h.conclusion );
    }
    return out;
  }
};

inline std::string render( sequent const& s, quotation_context const* fold = nullptr )
{
  auto text = [&]( formula const& f ) { return fold ? render_folded( f, *fold ) : render( f ); };
  auto list = [&]( std::vector<formula> const& fs ) {
    std::string out;
    for ( std::size_t i = 0; i < fs.size(); ++i )
      out += ( i ? ", " : "" ) + text( fs[i] );
    return out;
  };
  std::string lhs;
  for ( auto const& h : s.hypotheticals )
  {
    lhs += ( lhs.empty() ? "" : ", " ) + std::string( "[" ) + list( h.assumptions ) +
           ( h.assumptions.empty() ? "|- " : " |- " ) + text( h.conclusion ) + "]";
  }
  if ( !s.premises.empty() )
    lhs += ( lhs.empty() ? "" : ", " ) + list( s.premises );
  return lhs + ( lhs.empty() ? "|- " : " |- " ) + text( s.conclusion );
}

struct verdict
{
  bool valid = true;
  std::optional<model> countermodel;
  std::size_t models_checked = 0;
};

struct enumeration_options
{
  bool classical = false;
  bool transparent = false;
  connective_family family = connective_family::strong_kleene;
  std::size_t cap = default_atom_cap;
};

/*! \brief Cap from `BRIDGELAB_CAP` when set, else `fallback`. */
inline std::size_t cap_from_environment( std::size_t fallback = default_atom_cap )
{
  if ( char const* env = std::getenv( "BRIDGELAB_CAP" ) )
  {
    char* end = nullptr;
    auto const v = std::strtoul( env, &end, 10 );
    if ( end != env && *end == '\0' )
      return static_cast<std::size_t>( v );
  }
  return fallback;
}

/*! \brief Transparency filter for enumerated models: every valued `True(n)` matches its referent. */
inline bool admissible( model const& m, connective_family family )
{
  if ( !m.transparent )
    return true;
  for ( auto const& [name, body] : m.ctx.names )
  {
    auto lhs = m.lookup( true_key( name ) );
    if ( lhs && *lhs != eval( body, m, family ) )
      return false;
  }
  return true;
}

/*! \brief Visit every admissible model over `free_atoms`, in a fixed order.

  Atoms are taken in the given order, the first one varying slowest, each over
  0, 1/2, 1 (or 0, 1 for classical runs). `fixed` atoms keep their value in
  every model. The visitor returns false to stop early. Returns the number of
  admissible models visited.
*/
inline std::size_t for_each_model( std::set<std::string> const& domain, std::vector<std::string> const& free_atoms,
                                   std::map<std::string, truth_value> const& fixed, quotation_context const& ctx,
                                   enumeration_options const& opts, std::function<bool( model const& )> const& visit )
{
  if ( free_atoms.size() > opts.cap )
    throw cap_exceeded( free_atoms.size(), opts.cap );
  std::vector<truth_value> const values = opts.classical ? std::vector<truth_value>{ tv_zero, tv_one }
                                                         : std::vector<truth_value>{ tv_zero, tv_half, tv_one };
  model m;
  m.domain = domain;
  m.ctx = ctx;
  m.transparent = opts.transparent;
  m.atoms = fixed;
  std::vector<std::size_t> digits( free_atoms.size(), 0 );
  for ( auto const& a : free_atoms )
    m.atoms[a] = values.front();

  std::size_t visited = 0;
  while ( true )
  {
    if ( admissible( m, opts.family ) )
    {
      ++visited;
      if ( !visit( m ) )
        return visited;
    }
    std::size_t i = free_atoms.size();
    while ( i > 0 )
    {
      --i;
      if ( ++digits[i] < values.size() )
      {
        m.atoms[free_atoms[i]] = values[digits[i]];
        break;
      }
      digits[i] = 0;
      m.atoms[free_atoms[i]] = values.front();
      if ( i == 0 )
        return visited;
    }
    if ( free_atoms.empty() )
      return visited;
  }
}

/*! \brief All admissible models over the given atoms, materialised. */
inline std::vector<model> enumerate_models( std::set<std::string> const& domain, std::vector<std::string> const& free_atoms,
                                            quotation_context const& ctx, enumeration_options const& opts,
                                            std::map<std::string, truth_value> const& fixed = {} )
{
  std::vector<model> out;
  for_each_model( domain, free_atoms, fixed, ctx, opts, [&]( model const& m ) {
    out.push_back( m );
    return true;
  } );
  return out;
}

/*! \brief Quantifier range of a sequent: the declared domain, else every constant in sight. */
inline std::set<std::string> effective_domain( sequent const& s )
{
  if ( !s.sig.domain.empty() )
    return s.sig.domain;
  std::set<std::string> domain;
  std::vector<formula> pending = s.all_formulas();
  std::set<std::string> seen_names;
  while ( !pending.empty() )
  {
    auto f = pending.back();
    pending.pop_back();
    for ( auto const& c : constants_of( f ) )
    {
      domain.insert( c );
      if ( s.ctx.binds( c ) && seen_names.insert( c ).second )
        pending.push_back( s.ctx.referent( c ) );
    }
  }
  return domain;
}

/*! \brief Atoms to enumerate for a sequent, sorted; fixed atoms excluded. */
inline std::vector<std::string> free_atoms_of( sequent const& s )
{
  auto const domain = effective_domain( s );
  std::set<std::string> atoms;
  for ( auto const& f : s.all_formulas() )
  {
    auto more = ground_atoms( f, domain, s.ctx, s.transparent );
    atoms.insert( more.begin(), more.end() );
  }
  std::vector<std::string> out;
  for ( auto const& a : atoms )
  {
    if ( !s.sig.fixed.count( a ) )
      out.push_back( a );
  }
  return out;
}

/*! \brief Does `m` refute the sequent under relation r? */
inline bool refutes( model const& m, sequent const& s, relation r, connective_family family )
{
  auto const x = premise_standard( r );
  auto const y = conclusion_standard( r );
  auto holds = [&]( formula const& f, designation d ) { return designated( eval( f, m, family ), d ); };
  for ( auto const& p : s.premises )
  {
    if ( !holds( p, x ) )
      return false;
  }
  for ( auto const& h : s.hypotheticals )
  {
    bool const antecedent = std::all_of( h.assumptions.begin(), h.assumptions.end(),
                                         [&]( formula const& a ) { return holds( a, x ); } );
    if ( antecedent && !holds( h.conclusion, y ) )
      return false;
  }
  return !holds( s.conclusion, y );
}

/*! \brief Decide the sequent under r by brute force; the first refuting model is returned. */
inline verdict valid( sequent const& s, relation r, connective_family family = connective_family::strong_kleene,
                      std::size_t cap = default_atom_cap )
{
  enumeration_options opts;
  opts.classical = is_classical( r );
  opts.transparent = s.transparent;
  opts.family = family;
  opts.cap = cap;
  verdict out;
  out.models_checked = for_each_model( effective_domain( s ), free_atoms_of( s ), s.sig.fixed, s.ctx, opts,
                                       [&]( model const& m ) {
                                         if ( refutes( m, s, r, family ) )
                                         {
                                           out.valid = false;
                                           out.countermodel = m;
                                           return false;
                                         }
                                         return true;
                                       } );
  return out;
}

/* ---------------------------------------------------------------------------
 * Classical agreement over a bounded propositional pool
 * ------------------------------------------------------------------------- */

struct agreement_options
{
  std::size_t atoms = 2;
  std::size_t depth = 2;
  /* premise pairs are drawn from the pool of this depth */
  std::size_t pair_depth = 1;
  std::size_t max_examples = 10;
  std::size_t cap = default_atom_cap;
};

struct agreement_report
{
  std::size_t atoms = 0;
  std::size_t depth = 0;
  std::size_t pool_size = 0;
  std::size_t sequents_checked = 0;
  std::map<std::string, std::size_t> valid_counts; /* per relation */

  /* ST-valid but not CL-valid, or the converse */
  std::size_t st_cl_disagreements = 0;
  std::size_t ss_not_st = 0;
  std::size_t ts_not_ss = 0;
  std::size_t ts_not_tt = 0;
  std::vector<std::string> examples;

  bool clean() const { return st_cl_disagreements == 0 && ss_not_st == 0 && ts_not_ss == 0 && ts_not_tt == 0; }
};

/*! \brief Formulas over atoms A, B, ... and falsum with ~, &, |, ->, <-> up to the given depth. */
inline std::vector<formula> formula_pool( std::size_t atoms, std::size_t depth )
{
  std::vector<formula> pool;
  for ( std::size_t i = 0; i < atoms; ++i )
    pool.push_back( formula::atom( std::string( 1, static_cast<char>( 'A' + i ) ) ) );
  pool.push_back( formula::falsum() );
  for ( std::size_t d = 1; d <= depth; ++d )
  {
    auto const prev = pool;
    std::set<formula> seen( prev.begin(), prev.end() );
    auto add = [&]( formula f ) {
      if ( seen.insert( f ).second )
        pool.push_back( std::move( f ) );
    };
    for ( auto const& a : prev )
      add( formula::negation( a ) );
    for ( auto const& a : prev )
    {
      for ( auto const& b : prev )
      {
        add( formula::conjunction( a, b ) );
        add( formula::disjunction( a, b ) );
        add( formula::conditional( a, b ) );
        add( formula::biconditional( a, b ) );
      }
    }
  }
  return pool;
}

/*! \brief Compare ST with CL, and check the designation containments, over every small sequent.

  Sequents are: each pool formula as conclusion, with premise sets of size 0,
  1 (from the whole pool) and 2 (from the `pair_depth` pool). Each formula is
  evaluated once per valuation; a sequent is then decided by comparing the sets
  of valuations designating its premises and its conclusion. Strong Kleene, no
  truth predicate.
*/
inline agreement_report classical_agreement( agreement_options const& opts = {} )
{
  if ( opts.atoms > opts.cap )
    throw cap_exceeded( opts.atoms, opts.cap );
  if ( opts.atoms > 3 )
    throw std::invalid_argument( "classical agreement supports at most 3 atoms (27 valuations)" );

  agreement_report report;
  report.atoms = opts.atoms;
  report.depth = opts.depth;

  auto const pool = formula_pool( opts.atoms, opts.depth );
  report.pool_size = pool.size();
  std::vector<std::string> atom_names;
  for ( std::size_t i = 0; i < opts.atoms; ++i )
    atom_names.emplace_back( 1, static_cast<char>( 'A' + i ) );
  auto const valuations = enumerate_models( {}, atom_names, {}, enumeration_options{ false, false, {}, opts.cap } );

  using mask = std::uint64_t;
  mask classical_bits = 0;
  for ( std::size_t v = 0; v < valuations.size(); ++v )
  {
    if ( valuations[v].is_classical() )
      classical_bits |= mask{ 1 } << v;
  }
  struct masks
  {
    mask strict = 0, tolerant = 0;
  };
  std::vector<masks> table( pool.size() );
  for ( std::size_t i = 0; i < pool.size(); ++i )
  {
    for ( std::size_t v = 0; v < valuations.size(); ++v )
    {
      auto const value = eval( pool[i], valuations[v], connective_family::strong_kleene );
      if ( designated( value, designation::strict ) )
        table[i].strict |= mask{ 1 } << v;
      if ( designated( value, designation::tolerant ) )
        table[i].tolerant |= mask{ 1 } << v;
    }
  }

  std::size_t pair_pool = 0;
  while ( pair_pool < pool.size() && depth( pool[pair_pool] ) <= opts.pair_depth )
    ++pair_pool;

  mask const everything = valuations.size() == 64 ? ~mask{ 0 } : ( mask{ 1 } << valuations.size() ) - 1;
  std::array<std::size_t, 5> counts{};

  auto record = [&]( std::string const& what, std::string const& prem_text, std::size_t c ) {
    if ( report.examples.size() < opts.max_examples )
      report.examples.push_back( what + ": " + prem_text + ( prem_text.empty() ? "|- " : " |- " ) + render( pool[c] ) );
  };

  auto check = [&]( masks const& prem, std::size_t c, auto&& prem_text ) {
    auto const& concl = table[c];
    bool const cl = ( prem.strict & classical_bits & ~concl.strict ) == 0;
    bool const ss = ( prem.strict & ~concl.strict ) == 0;
    bool const tt = ( prem.tolerant & ~concl.tolerant ) == 0;
    bool const st = ( prem.strict & ~concl.tolerant ) == 0;
    bool const ts = ( prem.tolerant & ~concl.strict ) == 0;
    ++report.sequents_checked;
    counts[0] += cl;
    counts[1] += ss;
    counts[2] += tt;
    counts[3] += st;
    counts[4] += ts;
    if ( st != cl ) [[unlikely]]
    {
      ++report.st_cl_disagreements;
      record( st ? "ST not CL" : "CL not ST", prem_text(), c );
    }
    if ( ss && !st ) [[unlikely]]
    {
      ++report.ss_not_st;
      record( "SS not ST", prem_text(), c );
    }
    if ( ts && !ss ) [[unlikely]]
    {
      ++report.ts_not_ss;
      record( "TS not SS", prem_text(), c );
    }
    if ( ts && !tt ) [[unlikely]]
    {
      ++report.ts_not_tt;
      record( "TS not TT", prem_text(), c );
    }
  };

  for ( std::size_t c = 0; c < pool.size(); ++c )
  {
    check( masks{ everything, everything }, c, [] { return std::string(); } );
    for ( std::size_t p = 0; p < pool.size(); ++p )
      check( table[p], c, [&] { return render( pool[p] ); } );
    for ( std::size_t p = 0; p < pair_pool; ++p )
    {
      for ( std::size_t q = p + 1; q < pair_pool; ++q )
      {
        masks const both{ table[p].strict & table[q].strict, table[p].tolerant & table[q].tolerant };
        check( both, c, [&] { return render( pool[p] ) + ", " + render( pool[q] ); } );
      }
    }
  }
  for ( std::size_t k = 0; k < counts.size(); ++k )
  {
    report.valid_counts[std::string( to_string( all_relations[k] ) )] = counts[k];
  }

  return report;
}

} // namespace bridgelab
