/*!
  \file proof.hpp
  \brief Natural-deduction proof trees, their script format, and per-step validity
*/

#pragma once

#include <bridgelab/consequence.hpp>
#include <bridgelab/formula.hpp>
#include <bridgelab/parser.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bridgelab
{

enum class rule
{
  premise,
  hypothesis,
  taut,
  and_e,
  and_i,
  or_e,
  cond_e,
  cond_i,
  forall_e,
  tr,
  neg_tr,
  bicond_i,
  s_rule,
  efq,
  reductio
};

namespace detail
{
struct rule_name
{
  rule r;
  std::string_view text;
};

inline constexpr rule_name rule_names[] = {
    { rule::premise, "Premise" }, { rule::hypothesis, "Hyp" },  { rule::taut, "Taut" },
    { rule::and_e, "AndE" },      { rule::and_i, "AndI" },      { rule::or_e, "OrE" },
    { rule::cond_e, "CondE" },    { rule::cond_i, "CondI" },    { rule::forall_e, "ForallE" },
    { rule::tr, "Tr" },           { rule::neg_tr, "NegTr" },    { rule::bicond_i, "BicondI" },
    { rule::s_rule, "SRule" },    { rule::efq, "EFQ" },         { rule::reductio, "Reductio" } };
} // namespace detail

inline std::string_view to_string( rule r )
{
  for ( auto const& n : detail::rule_names )
  {
    if ( n.r == r )
      return n.text;
  }
  return "?";
}

inline std::optional<rule> parse_rule( std::string_view text )
{
  for ( auto const& n : detail::rule_names )
  {
    if ( n.text == text )
      return n.r;
  }
  if ( text == "Hypothesis" )
    return rule::hypothesis;
  return std::nullopt;
}

/*! \brief Raised for unreadable proof scripts and for checking a proof with malformed steps. */
class proof_error : public std::runtime_error
{
public:
  proof_error( std::string step, std::string const& message )
      : std::runtime_error( step.empty() ? message : "step " + step + ": " + message ), _step( std::move( step ) )
  {
  }

  std::string const& step() const noexcept { return _step; }

private:
  std::string _step;
};

/*! \brief One inference.

  `labels` holds the hypothesis label of a `Hyp` leaf, or the labels a
  discharging rule closes (one for CondI and Reductio, two for OrE, matching
  its second and third child).
*/
struct step
{
  std::string id;
  rule r = rule::premise;
  std::vector<std::size_t> children;
  std::vector<std::string> labels;
  formula conclusion;
};

/*! \brief Proof tree; `steps[0]` is the root and steps are stored in pre-order. */
struct proof
{
  std::string name;
  quotation_context ctx;
  bool transparent = false;
  std::vector<formula> premises;
  std::vector<step> steps;

  step const& root() const { return steps.front(); }

  std::size_t index_of( std::string const& id ) const
  {
    for ( std::size_t i = 0; i < steps.size(); ++i )
    {
      if ( steps[i].id == id )
        return i;
    }
    throw std::out_of_range( "no step '" + id + "'" );
  }
};

/* ---------------------------------------------------------------------------
 * Script format
 * ------------------------------------------------------------------------- */

namespace detail
{

inline std::vector<std::string> split_list( std::string_view body )
{
  std::vector<std::string> out;
  std::string current;
  for ( char c : body )
  {
    if ( c == ',' || c == ' ' || c == '\t' )
    {
      if ( !current.empty() )
        out.push_back( std::move( current ) );
      current.clear();
    }
    else
      current += c;
  }
  if ( !current.empty() )
    out.push_back( std::move( current ) );
  return out;
}

inline void order_preorder( proof& p )
{
  std::vector<std::size_t> parent( p.steps.size(), p.steps.size() );
  for ( std::size_t i = 0; i < p.steps.size(); ++i )
  {
    for ( auto c : p.steps[i].children )
    {
      if ( c == 0 )
        throw proof_error( p.steps[i].id, "the root cannot be used as a premise" );
      if ( parent[c] != p.steps.size() )
        throw proof_error( p.steps[c].id, "used by both '" + p.steps[parent[c]].id + "' and '" + p.steps[i].id + "'" );
      parent[c] = i;
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> seen( p.steps.size(), false );
  std::vector<std::size_t> stack{ 0 };
  while ( !stack.empty() )
  {
    auto i = stack.back();
    stack.pop_back();
    if ( seen[i] )
      throw proof_error( p.steps[i].id, "cycle through this step" );
    seen[i] = true;
    order.push_back( i );
    for ( auto it = p.steps[i].children.rbegin(); it != p.steps[i].children.rend(); ++it )
      stack.push_back( *it );
  }
  for ( std::size_t i = 0; i < p.steps.size(); ++i )
  {
    if ( !seen[i] )
      throw proof_error( p.steps[i].id, "not connected to the root" );
  }
  std::vector<std::size_t> position( p.steps.size() );
  for ( std::size_t k = 0; k < order.size(); ++k )
    position[order[k]] = k;
  std::vector<step> sorted;
  sorted.reserve( order.size() );
  for ( auto i : order )
  {
    auto s = p.steps[i];
    for ( auto& c : s.children )
      c = position[c];
    sorted.push_back( std::move( s ) );
  }
  p.steps = std::move( sorted );
}

} // namespace detail

/*! \brief Read a proof script.

      proof NAME
      domain a b
      name b := Fut Pun(a)
      define phi := ...
      transparent
      premise FORMULA
      ID: RULE [CHILD, ...] {LABEL, ...} FORMULA

  The first step line is the root. Children may be listed in any order;
  indentation is cosmetic. `#` starts a comment.
*/
inline proof parse_proof( std::string_view text )
{
  proof p;
  std::string declarations;
  struct pending_line
  {
    std::size_t line;
    std::string text;
    bool is_premise;
  };
  std::vector<pending_line> pending;

  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    auto const stripped = detail::trim( line );
    if ( stripped.empty() )
      continue;
    std::istringstream words( stripped );
    std::string keyword;
    words >> keyword;
    if ( keyword == "proof" )
      words >> p.name;
    else if ( keyword == "transparent" )
      p.transparent = true;
    else if ( keyword == "domain" || keyword == "name" || keyword == "define" )
      declarations += stripped + "\n";
    else if ( keyword == "premise" )
      pending.push_back( { lineno, detail::trim( std::string_view( stripped ).substr( keyword.size() ) ), true } );
    else
      pending.push_back( { lineno, stripped, false } );
  }

  p.ctx = parse_context( declarations );

  auto fail = [&]( std::size_t at, std::string const& msg ) -> parse_error {
    return parse_error( parse_error::reason::syntax, 0, "line " + std::to_string( at ) + ": " + msg );
  };
  auto formula_at = [&]( std::size_t at, std::string const& src ) {
    try
    {
      return parse( src, p.ctx );
    }
    catch ( parse_error const& e )
    {
      throw parse_error( e.why(), e.position(), "line " + std::to_string( at ) + ": " + e.what() );
    }
  };

  std::vector<std::vector<std::string>> child_ids;
  std::map<std::string, std::size_t> by_id;
  for ( auto const& pl : pending )
  {
    if ( pl.is_premise )
    {
      p.premises.push_back( formula_at( pl.line, pl.text ) );
      continue;
    }
    std::string_view rest = pl.text;
    auto const colon = rest.find( ':' );
    if ( colon == std::string_view::npos )
      throw fail( pl.line, "expected 'ID: RULE ...'" );
    step s;
    s.id = detail::trim( rest.substr( 0, colon ) );
    if ( s.id.empty() || s.id.find( ' ' ) != std::string::npos )
      throw fail( pl.line, "bad step id '" + s.id + "'" );
    rest = rest.substr( colon + 1 );
    rest.remove_prefix( std::min( rest.size(), rest.find_first_not_of( " \t" ) ) );
    auto const rule_end = std::min( rest.size(), rest.find_first_of( " \t[{" ) );
    auto const r = parse_rule( rest.substr( 0, rule_end ) );
    if ( !r )
      throw fail( pl.line, "unknown rule '" + std::string( rest.substr( 0, rule_end ) ) + "'" );
    s.r = *r;
    rest = rest.substr( rule_end );
    std::vector<std::string> kids;
    auto bracket = [&]( char open, char close, std::vector<std::string>& into ) {
      rest.remove_prefix( std::min( rest.size(), rest.find_first_not_of( " \t" ) ) );
      if ( rest.empty() || rest.front() != open )
        return;
      auto const end = rest.find( close );
      if ( end == std::string_view::npos )
        throw fail( pl.line, std::string( "missing '" ) + close + "'" );
      into = detail::split_list( rest.substr( 1, end - 1 ) );
      rest = rest.substr( end + 1 );
    };
    bracket( '[', ']', kids );
    bracket( '{', '}', s.labels );
    auto const body = detail::trim( rest );
    if ( body.empty() )
      throw fail( pl.line, "step '" + s.id + "' has no formula" );
    s.conclusion = formula_at( pl.line, body );
    if ( !by_id.emplace( s.id, p.steps.size() ).second )
      throw fail( pl.line, "duplicate step id '" + s.id + "'" );
    p.steps.push_back( std::move( s ) );
    child_ids.push_back( std::move( kids ) );
  }
  if ( p.steps.empty() )
    throw parse_error( parse_error::reason::syntax, text.size(), "proof has no steps" );

  for ( std::size_t i = 0; i < p.steps.size(); ++i )
  {
    for ( auto const& id : child_ids[i] )
    {
      auto it = by_id.find( id );
      if ( it == by_id.end() )
        throw proof_error( p.steps[i].id, "unknown child '" + id + "'" );
      p.steps[i].children.push_back( it->second );
    }
  }
  detail::order_preorder( p );
  return p;
}

/*! \brief Canonical script text; `parse_proof` reads it back to the same proof. */
inline std::string print_proof( proof const& p )
{
  std::string out = "proof " + p.name + "\n";
  std::set<std::string> constants = p.ctx.constants;
  for ( auto const& [n, _] : p.ctx.names )
    constants.erase( n );
  if ( !constants.empty() )
  {
    out += "domain";
    for ( auto const& c : constants )
      out += " " + c;
    out += "\n";
  }
  for ( auto const& [n, body] : p.ctx.names )
    out += "name " + n + " := " + render( body ) + "\n";
  /* abbreviations in dependency order, so each definition parses */
  std::vector<std::string> emitted;
  quotation_context partial;
  partial.names = p.ctx.names;
  partial.constants = p.ctx.constants;
  while ( emitted.size() < p.ctx.abbreviations.size() )
  {
    std::size_t const before = emitted.size();
    for ( auto const& [n, body] : p.ctx.abbreviations )
    {
      if ( std::find( emitted.begin(), emitted.end(), n ) != emitted.end() )
        continue;
      bool uses_pending = false;
      for ( auto const& [m, other] : p.ctx.abbreviations )
      {
        if ( m != n && std::find( emitted.begin(), emitted.end(), m ) == emitted.end() && other != body &&
             std::find( body.children().begin(), body.children().end(), other ) != body.children().end() )
          uses_pending = true;
      }
      if ( uses_pending )
        continue;
      out += "define " + n + " := " + render_folded( body, partial ) + "\n";
      partial.abbreviations[n] = body;
      emitted.push_back( n );
    }
    if ( emitted.size() == before )
      break;
  }
  if ( p.transparent )
    out += "transparent\n";
  for ( auto const& f : p.premises )
    out += "premise " + render_folded( f, p.ctx ) + "\n";
  out += "\n";

  std::vector<std::size_t> depth( p.steps.size(), 0 );
  for ( std::size_t i = 0; i < p.steps.size(); ++i )
  {
    auto const& s = p.steps[i];
    for ( auto c : s.children )
      depth[c] = depth[i] + 1;
    out += std::string( 2 * depth[i], ' ' ) + s.id + ": " + std::string( to_string( s.r ) );
    if ( !s.children.empty() )
    {
      out += " [";
      for ( std::size_t k = 0; k < s.children.size(); ++k )
        out += ( k ? ", " : "" ) + p.steps[s.children[k]].id;
      out += "]";
    }
    if ( !s.labels.empty() )
    {
      out += " {";
      for ( std::size_t k = 0; k < s.labels.size(); ++k )
        out += ( k ? ", " : "" ) + s.labels[k];
      out += "}";
    }
    out += " " + render_folded( s.conclusion, p.ctx ) + "\n";
  }
  return out;
}

/* ---------------------------------------------------------------------------
 * Checking
 * ------------------------------------------------------------------------- */

/*! \brief Result for one step.

  `local` is the rule instance: the child conclusions entail the step's
  conclusion, with every discharged subproof entering as a hypothetical
  premise `[hypothesis |- child conclusion]`. `context` is the step read as
  `open assumptions |- conclusion`.
*/
struct step_report
{
  std::string id;
  rule r = rule::premise;
  std::size_t depth = 0;
  formula conclusion;
  sequent local;
  sequent context;
  bool syntactic_ok = true;
  std::string message;
  std::map<relation, verdict> per_relation;
};

struct proof_report
{
  std::string name;
  std::vector<step_report> steps;
  /* declared premises |- root conclusion, decided on its own */
  sequent root_sequent;
  std::map<relation, verdict> root_verdicts;

  bool syntactic_ok() const
  {
    return std::all_of( steps.begin(), steps.end(), []( auto const& s ) { return s.syntactic_ok; } );
  }

  std::optional<std::string> first_failure( relation r ) const
  {
    for ( auto const& s : steps )
    {
      auto it = s.per_relation.find( r );
      if ( it != s.per_relation.end() && !it->second.valid )
        return s.id;
    }
    return std::nullopt;
  }

  bool all_valid( relation r ) const { return syntactic_ok() && !first_failure( r ); }
};

namespace detail
{

inline bool is_tautology( formula const& f, proof const& p )
{
  sequent s;
  s.conclusion = f;
  s.ctx = p.ctx;
  s.sig.domain = p.ctx.constants;
  return valid( s, relation::cl ).valid;
}

/* instances of f's leading universal binders (at least one) over `constants` */
inline bool is_universal_instance( formula const& general, formula const& instance, std::set<std::string> const& constants )
{
  std::vector<std::string> vars;
  formula body = general;
  while ( body.is( formula_kind::forall ) )
  {
    vars.push_back( body.symbol() );
    body = body.child();
    std::function<bool( std::size_t, formula const& )> choose = [&]( std::size_t k, formula const& g ) {
      if ( k == vars.size() )
        return g == instance;
      for ( auto const& c : constants )
      {
        if ( choose( k + 1, instantiate( g, vars[k], term::constant( c ) ) ) )
          return true;
      }
      return false;
    };
    if ( choose( 0, body ) )
      return true;
  }
  return false;
}

class proof_checker
{
public:
  explicit proof_checker( proof const& p ) : _p( p )
  {
    _depth.assign( p.steps.size(), 0 );
    for ( std::size_t i = 0; i < p.steps.size(); ++i )
    {
      for ( auto c : p.steps[i].children )
        _depth[c] = _depth[i] + 1;
    }
    _open.resize( p.steps.size() );
    _premises_used.resize( p.steps.size() );
    for ( std::size_t i = p.steps.size(); i-- > 0; )
      collect_open( i );
  }

  std::vector<step_report> run()
  {
    std::vector<step_report> out;
    for ( std::size_t i = 0; i < _p.steps.size(); ++i )
    {
      step_report rep;
      auto const& s = _p.steps[i];
      rep.id = s.id;
      rep.r = s.r;
      rep.depth = _depth[i];
      rep.conclusion = s.conclusion;
      rep.context = context_sequent( i );
      try
      {
        rep.local = local_sequent( i );
        if ( auto problem = side_condition( i ) )
        {
          rep.syntactic_ok = false;
          rep.message = *problem;
        }
      }
      catch ( proof_error const& e )
      {
        rep.syntactic_ok = false;
        rep.message = e.what();
      }
      out.push_back( std::move( rep ) );
    }
    if ( auto problem = root_condition(); problem && out.front().syntactic_ok )
    {
      out.front().syntactic_ok = false;
      out.front().message = *problem;
    }
    return out;
  }

  sequent base() const
  {
    sequent s;
    s.ctx = _p.ctx;
    s.transparent = _p.transparent;
    s.sig.domain = _p.ctx.constants;
    return s;
  }

private:
  step const& child( std::size_t i, std::size_t k ) const { return _p.steps[_p.steps[i].children[k]]; }

  std::optional<formula> hypothesis_formula( std::size_t i, std::string const& label ) const
  {
    auto const& open = _open[i];
    auto it = open.find( label );
    if ( it == open.end() )
      return std::nullopt;
    return it->second;
  }

  void collect_open( std::size_t i )
  {
    auto const& s = _p.steps[i];
    auto& open = _open[i];
    if ( s.r == rule::hypothesis && s.labels.size() == 1 )
      open.emplace( s.labels.front(), s.conclusion );
    if ( s.r == rule::premise )
      _premises_used[i].insert( s.conclusion );
    for ( std::size_t k = 0; k < s.children.size(); ++k )
    {
      auto c = s.children[k];
      for ( auto const& [label, f] : _open[c] )
      {
        if ( discharges( s, k, label ) )
          continue;
        auto [it, fresh] = open.emplace( label, f );
        if ( !fresh && it->second != f )
          _conflicts.emplace_back( i, label );
      }
      _premises_used[i].insert( _premises_used[c].begin(), _premises_used[c].end() );
    }
  }

  static bool discharges( step const& s, std::size_t child_index, std::string const& label )
  {
    switch ( s.r )
    {
    case rule::cond_i:
    case rule::reductio:
      return child_index == 0 && std::find( s.labels.begin(), s.labels.end(), label ) != s.labels.end();
    case rule::or_e:
      return child_index >= 1 && child_index - 1 < s.labels.size() && s.labels[child_index - 1] == label;
    default:
      return false;
    }
  }

  sequent context_sequent( std::size_t i ) const
  {
    auto s = base();
    std::set<formula> assumptions = _premises_used[i];
    for ( auto const& [_, f] : _open[i] )
      assumptions.insert( f );
    s.premises.assign( assumptions.begin(), assumptions.end() );
    s.conclusion = _p.steps[i].conclusion;
    return s;
  }

  formula discharged_formula( std::size_t i, std::size_t k, std::string const& label ) const
  {
    auto h = hypothesis_formula( _p.steps[i].children[k], label );
    if ( !h )
      throw proof_error( _p.steps[i].id, "label '" + label + "' is not an open hypothesis of '" + child( i, k ).id + "'" );
    return *h;
  }

  void expect_arity( std::size_t i, std::size_t children, std::size_t labels ) const
  {
    auto const& s = _p.steps[i];
    if ( s.children.size() != children )
    {
      throw proof_error( s.id, std::string( to_string( s.r ) ) + " takes " + std::to_string( children ) +
                                   " premise(s), got " + std::to_string( s.children.size() ) );
    }
    if ( s.labels.size() != labels )
    {
      throw proof_error( s.id, std::string( to_string( s.r ) ) + " takes " + std::to_string( labels ) +
                                   " label(s), got " + std::to_string( s.labels.size() ) );
    }
  }

  sequent local_sequent( std::size_t i ) const
  {
    auto const& s = _p.steps[i];
    auto seq = base();
    seq.conclusion = s.conclusion;
    switch ( s.r )
    {
    case rule::premise:
      expect_arity( i, 0, 0 );
      seq.premises = { s.conclusion };
      break;
    case rule::hypothesis:
      expect_arity( i, 0, 1 );
      seq.premises = { s.conclusion };
      break;
    case rule::taut:
      expect_arity( i, 0, 0 );
      break;
    case rule::cond_i:
    case rule::reductio:
      expect_arity( i, 1, 1 );
      seq.hypotheticals.push_back( { { discharged_formula( i, 0, s.labels[0] ) }, child( i, 0 ).conclusion } );
      break;
    case rule::or_e:
      expect_arity( i, 3, 2 );
      seq.premises = { child( i, 0 ).conclusion };
      seq.hypotheticals.push_back( { { discharged_formula( i, 1, s.labels[0] ) }, child( i, 1 ).conclusion } );
      seq.hypotheticals.push_back( { { discharged_formula( i, 2, s.labels[1] ) }, child( i, 2 ).conclusion } );
      break;
    case rule::and_i:
    case rule::cond_e:
    case rule::bicond_i:
      expect_arity( i, 2, 0 );
      seq.premises = { child( i, 0 ).conclusion, child( i, 1 ).conclusion };
      break;
    default:
      expect_arity( i, 1, 0 );
      seq.premises = { child( i, 0 ).conclusion };
    }
    return seq;
  }

  std::optional<std::string> side_condition( std::size_t i ) const
  {
    auto const& s = _p.steps[i];
    auto const& c = s.conclusion;
    auto shape = [&]( std::string const& expected ) -> std::optional<std::string> {
      return std::string( to_string( s.r ) ) + ": expected " + expected;
    };
    for ( auto const& [at, label] : _conflicts )
    {
      if ( at == i )
        return "hypothesis label '" + label + "' stands for two different formulas";
    }
    switch ( s.r )
    {
    case rule::premise:
      if ( std::find( _p.premises.begin(), _p.premises.end(), c ) == _p.premises.end() )
        return "Premise: '" + render_folded( c, _p.ctx ) + "' is not a declared premise";
      return std::nullopt;
    case rule::hypothesis:
      return std::nullopt;
    case rule::taut:
      if ( !is_closed( c ) || !is_tautology( c, _p ) )
        return "Taut: '" + render_folded( c, _p.ctx ) + "' is not a classical tautology";
      return std::nullopt;
    case rule::and_e:
    {
      auto const& a = child( i, 0 ).conclusion;
      if ( !a.is( formula_kind::conjunction ) || ( a.lhs() != c && a.rhs() != c ) )
        return shape( "premise A & B and conclusion A or B" );
      return std::nullopt;
    }
    case rule::and_i:
      if ( c != formula::conjunction( child( i, 0 ).conclusion, child( i, 1 ).conclusion ) )
        return shape( "conclusion A & B from premises A, B (in that order)" );
      return std::nullopt;
    case rule::or_e:
    {
      auto const& major = child( i, 0 ).conclusion;
      if ( !major.is( formula_kind::disjunction ) )
        return shape( "first premise A | B" );
      if ( discharged_formula( i, 1, s.labels[0] ) != major.lhs() ||
           discharged_formula( i, 2, s.labels[1] ) != major.rhs() )
        return shape( "the discharged hypotheses to be the disjuncts A and B" );
      if ( child( i, 1 ).conclusion != c || child( i, 2 ).conclusion != c )
        return shape( "both cases to conclude '" + render_folded( c, _p.ctx ) + "'" );
      return std::nullopt;
    }
    case rule::cond_e:
    {
      auto const& major = child( i, 0 ).conclusion;
      if ( !major.is( formula_kind::conditional ) || major.lhs() != child( i, 1 ).conclusion || major.rhs() != c )
        return shape( "premises A -> B and A, conclusion B" );
      return std::nullopt;
    }
    case rule::cond_i:
      if ( c != formula::conditional( discharged_formula( i, 0, s.labels[0] ), child( i, 0 ).conclusion ) )
        return shape( "conclusion A -> B from B with hypothesis A discharged" );
      return std::nullopt;
    case rule::forall_e:
    {
      auto const& general = child( i, 0 ).conclusion;
      if ( !general.is( formula_kind::forall ) || !is_universal_instance( general, c, constants_for( general, c ) ) )
        return shape( "an instance of the universal premise" );
      return std::nullopt;
    }
    case rule::tr:
    case rule::neg_tr:
    {
      auto a = child( i, 0 ).conclusion;
      auto b = c;
      if ( s.r == rule::neg_tr )
      {
        if ( !a.is( formula_kind::negation ) || !b.is( formula_kind::negation ) )
          return shape( "~A to ~True(n), or ~True(n) to ~A" );
        a = a.child();
        b = b.child();
      }
      auto names = [&]( formula const& t, formula const& body ) {
        return t.is( formula_kind::true_pred ) && !t.args().front().is_variable() &&
               _p.ctx.binds( t.args().front().name ) && _p.ctx.referent( t.args().front().name ) == body;
      };
      if ( !names( a, b ) && !names( b, a ) )
        return shape( "A to True(n), or True(n) to A, where n names A" );
      return std::nullopt;
    }
    case rule::bicond_i:
    {
      auto const& l = child( i, 0 ).conclusion;
      auto const& r = child( i, 1 ).conclusion;
      if ( !c.is( formula_kind::biconditional ) || l != formula::conditional( c.lhs(), c.rhs() ) ||
           r != formula::conditional( c.rhs(), c.lhs() ) )
        return shape( "premises A -> B and B -> A, conclusion A <-> B" );
      return std::nullopt;
    }
    case rule::s_rule:
    {
      auto const& a = child( i, 0 ).conclusion;
      if ( !a.is( formula_kind::biconditional ) || a.rhs() != formula::negation( a.lhs() ) ||
           c != formula::conjunction( ~formula::simpliciter( a.lhs() ), ~formula::simpliciter( ~a.lhs() ) ) )
        return shape( "premise A <-> ~A, conclusion ~Simp A & ~Simp ~A" );
      return std::nullopt;
    }
    case rule::efq:
    {
      auto const& a = child( i, 0 ).conclusion;
      bool const contradiction = a.is( formula_kind::conjunction ) && a.rhs() == formula::negation( a.lhs() ) &&
                                 c.is( formula_kind::falsum );
      if ( !contradiction && !a.is( formula_kind::falsum ) )
        return shape( "A & ~A to _|_, or _|_ to anything" );
      return std::nullopt;
    }
    case rule::reductio:
    default:
      if ( !child( i, 0 ).conclusion.is( formula_kind::falsum ) ||
           c != formula::negation( discharged_formula( i, 0, s.labels[0] ) ) )
        return shape( "_|_ with hypothesis A discharged, conclusion ~A" );
      return std::nullopt;
    }
  }

  std::set<std::string> constants_for( formula const& a, formula const& b ) const
  {
    auto out = _p.ctx.constants;
    auto more = constants_of( a );
    out.insert( more.begin(), more.end() );
    more = constants_of( b );
    out.insert( more.begin(), more.end() );
    return out;
  }

  std::optional<std::string> root_condition() const
  {
    if ( !_open[0].empty() )
      return "undischarged hypothesis '" + _open[0].begin()->first + "' at the root";
    std::set<formula> declared( _p.premises.begin(), _p.premises.end() );
    if ( _premises_used[0] != declared )
      return "the root's open assumptions differ from the declared premises";
    return std::nullopt;
  }

  proof const& _p;
  std::vector<std::size_t> _depth;
  std::vector<std::map<std::string, formula>> _open;
  std::vector<std::set<formula>> _premises_used;
  std::vector<std::pair<std::size_t, std::string>> _conflicts;
};

} // namespace detail

/*! \brief Rule side conditions and discharge bookkeeping, without semantics. */
inline proof_report check_syntax( proof const& p )
{
  detail::proof_checker checker( p );
  proof_report report;
  report.name = p.name;
  report.steps = checker.run();
  report.root_sequent = checker.base();
  report.root_sequent.premises = p.premises;
  report.root_sequent.conclusion = p.root().conclusion;
  return report;
}

struct proof_check_options
{
  std::vector<relation> relations{ relation::cl };
  std::optional<connective_family> family; /* unset: per-relation default */
  std::optional<bool> transparent;         /* unset: as declared by the proof */
  std::size_t cap = default_atom_cap;
  bool root = true;
};

/*! \brief Decide every step's rule instance, and the root sequent, under each requested relation.

  Throws `proof_error` naming the first malformed step.
*/
inline proof_report check_proof( proof const& p, proof_check_options const& opts = {} )
{
  auto report = check_syntax( p );
  for ( auto const& s : report.steps )
  {
    if ( !s.syntactic_ok )
      throw proof_error( s.id, s.message );
  }
  for ( auto& s : report.steps )
  {
    if ( opts.transparent )
    {
      s.local.transparent = *opts.transparent;
      s.context.transparent = *opts.transparent;
    }
    for ( auto r : opts.relations )
      s.per_relation[r] = valid( s.local, r, opts.family.value_or( default_family( r ) ), opts.cap );
  }
  if ( opts.transparent )
    report.root_sequent.transparent = *opts.transparent;
  if ( opts.root )
  {
    for ( auto r : opts.relations )
      report.root_verdicts[r] = valid( report.root_sequent, r, opts.family.value_or( default_family( r ) ), opts.cap );
  }
  return report;
}

} // namespace bridgelab
