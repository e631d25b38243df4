/*!
  \file semantics.hpp
  \brief Three-valued evaluation of closed formulas in finite models
*/

#pragma once

#include <bridgelab/formula.hpp>
#include <bridgelab/truth_value.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridgelab
{

/*! \brief Raised for unknown constants, missing atom values, unbound names and Fut misuse. */
class semantic_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Finite model.

  Atom values are keyed by the canonical text of the ground atom: `Says(a,b)`,
  `Pun`, `True(b)`, and for the frame-less reading of the future operator
  `Fut Pun(a)`.

  With `transparent` set, `True(n)` for a bound name `n` must agree with the
  value of n's referent. The constraint is checked by `check_transparency`, not
  assumed; when the model carries no entry for `True(n)` at all, evaluation
  falls through to the referent.
*/
struct model
{
  std::set<std::string> domain;
  std::map<std::string, truth_value> atoms;
  quotation_context ctx;
  bool transparent = false;

  std::optional<truth_value> lookup( std::string const& key ) const
  {
    auto it = atoms.find( key );
    if ( it == atoms.end() )
      return std::nullopt;
    return it->second;
  }

  bool is_classical() const
  {
    return std::all_of( atoms.begin(), atoms.end(), []( auto const& kv ) { return kv.second.is_classical(); } );
  }
};

inline std::string true_key( std::string const& name ) { return "True(" + name + ")"; }

struct trace_entry
{
  std::size_t depth;
  std::string text;
  truth_value value;
};

namespace detail
{

using binding_env = std::vector<std::pair<std::string, std::string>>;

inline std::string resolve_term( term const& t, binding_env const& env )
{
  if ( !t.is_variable() )
    return t.name;
  for ( auto it = env.rbegin(); it != env.rend(); ++it )
  {
    if ( it->first == t.name )
      return it->second;
  }
  throw semantic_error( "free variable '" + t.name + "' in evaluated formula" );
}

inline std::string ground_atom_key( formula const& atom, binding_env const& env )
{
  if ( atom.args().empty() )
    return atom.symbol();
  std::string key = atom.symbol() + "(";
  for ( std::size_t i = 0; i < atom.args().size(); ++i )
  {
    if ( i )
      key += ',';
    key += resolve_term( atom.args()[i], env );
  }
  return key + ")";
}

/* substitute the current bindings, for trace output */
inline formula close_under( formula f, binding_env const& env )
{
  for ( auto it = env.rbegin(); it != env.rend(); ++it )
  {
    f = instantiate( f, it->first, term::constant( it->second ) );
  }
  return f;
}

class evaluator
{
public:
  evaluator( model const& m, connective_family family, std::vector<trace_entry>* trace = nullptr )
      : _m( m ), _family( family ), _trace( trace )
  {
  }

  truth_value value( formula const& f )
  {
    std::size_t slot = 0;
    if ( _trace )
    {
      slot = _trace->size();
      _trace->push_back( { _depth, render( close_under( f, _env ) ), tv_zero } );
    }
    ++_depth;
    auto v = compute( f );
    --_depth;
    if ( _trace )
      ( *_trace )[slot].value = v;
    return v;
  }

private:
  std::string constant( term const& t )
  {
    auto c = resolve_term( t, _env );
    if ( !_m.domain.count( c ) )
      throw semantic_error( "unknown constant '" + c + "' (not in the model's domain)" );
    return c;
  }

  truth_value atom_value( std::string const& key )
  {
    if ( auto v = _m.lookup( key ) )
      return *v;
    throw semantic_error( "model assigns no value to atom '" + key + "'" );
  }

  truth_value truth_of( std::string const& name )
  {
    auto const key = true_key( name );
    if ( auto v = _m.lookup( key ) )
      return *v;
    if ( !_m.ctx.binds( name ) )
      throw semantic_error( "unbound sentence name '" + name + "' and no value for '" + key + "'" );
    if ( !_m.transparent )
      throw semantic_error( "model assigns no value to atom '" + key + "'" );
    if ( std::find( _active.begin(), _active.end(), name ) != _active.end() )
      throw semantic_error( "ungrounded self-reference through '" + name + "': the model must assign '" + key + "'" );
    _active.push_back( name );
    binding_env saved;
    std::swap( saved, _env );
    auto v = value( _m.ctx.referent( name ) );
    std::swap( saved, _env );
    _active.pop_back();
    return v;
  }

  truth_value quantify( formula const& f, bool universal )
  {
    truth_value acc = universal ? tv_one : tv_zero;
    for ( auto const& c : _m.domain )
    {
      _env.emplace_back( f.symbol(), c );
      auto v = value( f.child() );
      _env.pop_back();
      acc = universal ? conj( acc, v ) : disj( acc, v );
    }
    return acc;
  }

  truth_value compute( formula const& f )
  {
    switch ( f.kind() )
    {
    case formula_kind::falsum:
      return tv_zero;
    case formula_kind::atom:
      for ( auto const& t : f.args() )
        constant( t );
      return atom_value( ground_atom_key( f, _env ) );
    case formula_kind::true_pred:
      return truth_of( constant( f.args().front() ) );
    case formula_kind::negation:
      return neg( value( f.child() ) );
    case formula_kind::conjunction:
      return conj( value( f.lhs() ), value( f.rhs() ) );
    case formula_kind::disjunction:
      return disj( value( f.lhs() ), value( f.rhs() ) );
    case formula_kind::conditional:
    {
      auto a = value( f.lhs() );
      return cond( _family, a, value( f.rhs() ) );
    }
    case formula_kind::biconditional:
    {
      auto a = value( f.lhs() );
      return bicond( _family, a, value( f.rhs() ) );
    }
    case formula_kind::forall:
      return quantify( f, true );
    case formula_kind::exists:
      return quantify( f, false );
    case formula_kind::simpliciter:
      return bochvar_simp( value( f.child() ) );
    case formula_kind::future:
    default:
    {
      auto const& body = f.child();
      if ( !body.is( formula_kind::atom ) )
      {
        throw semantic_error( "'" + render( close_under( f, _env ) ) +
                              "': Fut over a compound formula needs a branching frame" );
      }
      for ( auto const& t : body.args() )
        constant( t );
      return atom_value( "Fut " + ground_atom_key( body, _env ) );
    }
    }
  }

  model const& _m;
  connective_family _family;
  std::vector<trace_entry>* _trace;
  binding_env _env;
  std::vector<std::string> _active;
  std::size_t _depth = 0;
};

} // namespace detail

/*! \brief Compositional three-valued value of a closed formula.

  Quantifiers are min/max over the domain, the biconditional is the
  conjunction of both conditionals of the family, Simp is the Bochvar
  operator whatever the family, and falsum is 0.
*/
inline truth_value eval( formula const& f, model const& m, connective_family family = connective_family::strong_kleene )
{
  return detail::evaluator( m, family ).value( f );
}

/*! \brief Like `eval`, also recording every evaluated (instantiated) subformula in pre-order. */
inline truth_value eval_traced( formula const& f, model const& m, connective_family family,
                                std::vector<trace_entry>& trace )
{
  return detail::evaluator( m, family, &trace ).value( f );
}

/*! \brief Ground atoms a formula's value can depend on over `domain`.

  With `transparent` set, the atoms of the referent of every bound name whose
  truth is mentioned are included too (transitively), since transparency ties
  their values together.
*/
inline std::set<std::string> ground_atoms( formula const& f, std::set<std::string> const& domain,
                                           quotation_context const& ctx, bool transparent )
{
  std::set<std::string> out;
  std::set<std::string> visited_names;
  detail::binding_env env;

  std::function<void( formula const& )> walk = [&]( formula const& g ) {
    switch ( g.kind() )
    {
    case formula_kind::atom:
      out.insert( detail::ground_atom_key( g, env ) );
      return;
    case formula_kind::true_pred:
    {
      auto const name = detail::resolve_term( g.args().front(), env );
      out.insert( true_key( name ) );
      if ( transparent && ctx.binds( name ) && visited_names.insert( name ).second )
      {
        detail::binding_env saved;
        std::swap( saved, env );
        walk( ctx.referent( name ) );
        std::swap( saved, env );
      }
      return;
    }
    case formula_kind::future:
      if ( !g.child().is( formula_kind::atom ) )
        throw semantic_error( "'" + render( g ) + "': Fut over a compound formula needs a branching frame" );
      out.insert( "Fut " + detail::ground_atom_key( g.child(), env ) );
      return;
    case formula_kind::forall:
    case formula_kind::exists:
      for ( auto const& c : domain )
      {
        env.emplace_back( g.symbol(), c );
        walk( g.child() );
        env.pop_back();
      }
      return;
    default:
      for ( auto const& c : g.children() )
        walk( c );
    }
  };
  walk( f );
  return out;
}

struct transparency_violation
{
  std::string name;
  truth_value truth_value_of_name; /* v(True(n)) */
  truth_value referent_value;      /* v(referent(n)) */
};

struct transparency_report
{
  std::vector<transparency_violation> violations;
  /* names with no transparent classical assignment at all (filled on request) */
  std::vector<std::string> no_classical_solution;

  bool ok() const { return violations.empty(); }
};

/*! \brief Names whose transparency constraints admit no classical assignment.

  Brute force over the classical values of the atoms the name's truth depends
  on; the Liar (l := ~True(l)) is the canonical member.
*/
inline std::vector<std::string> classically_unsatisfiable_names( quotation_context const& ctx, std::set<std::string> domain,
                                                                  connective_family family = connective_family::strong_kleene )
{
  for ( auto const& [name, body] : ctx.names )
  {
    domain.insert( name );
    auto cs = constants_of( body );
    domain.insert( cs.begin(), cs.end() );
  }
  std::vector<std::string> out;
  for ( auto const& [name, _] : ctx.names )
  {
    auto const atoms = ground_atoms( formula::true_pred( term::constant( name ) ), domain, ctx, true );
    std::vector<std::string> keys( atoms.begin(), atoms.end() );
    if ( keys.size() > 20u )
      throw semantic_error( "too many atoms behind '" + name + "' for classical solving" );
    bool solvable = false;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << keys.size() ) && !solvable; ++bits )
    {
      model m{ domain, {}, ctx, true };
      for ( std::size_t i = 0; i < keys.size(); ++i )
        m.atoms[keys[i]] = ( bits >> i ) & 1u ? tv_one : tv_zero;
      bool consistent = true;
      for ( auto const& k : keys )
      {
        if ( k.rfind( "True(", 0 ) != 0 )
          continue;
        auto const n = k.substr( 5, k.size() - 6 );
        if ( ctx.binds( n ) && m.atoms.at( k ) != eval( ctx.referent( n ), m, family ) )
        {
          consistent = false;
          break;
        }
      }
      solvable = consistent;
    }
    if ( !solvable )
      out.push_back( name );
  }
  return out;
}

/*! \brief Compare v(True(n)) with v(referent(n)) for every bound name the model values.

  Names without a `True(n)` entry are transparent by construction and skipped.
  With `classical` set, also lists names that no classical model can make
  transparent.
*/
inline transparency_report check_transparency( model const& m, connective_family family = connective_family::strong_kleene,
                                               bool classical = false )
{
  transparency_report report;
  for ( auto const& [name, body] : m.ctx.names )
  {
    auto lhs = m.lookup( true_key( name ) );
    if ( !lhs )
      continue;
    auto rhs = eval( body, m, family );
    if ( *lhs != rhs )
      report.violations.push_back( { name, *lhs, rhs } );
  }
  if ( classical )
    report.no_classical_solution = classically_unsatisfiable_names( m.ctx, m.domain, family );
  return report;
}

} // namespace bridgelab
