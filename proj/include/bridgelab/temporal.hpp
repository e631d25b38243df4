/*!
  \file temporal.hpp
  \brief Branching-time frames and the supervaluationist future operator

  A frame is a finite forest of moments. Histories are the maximal chains,
  i.e. root-to-leaf paths; they are computed on demand and never stored.
*/

#pragma once

#include <bridgelab/formula.hpp>
#include <bridgelab/semantics.hpp>
#include <bridgelab/truth_value.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bridgelab
{

/*! \brief Both "true on every history" and "false on every history" hold for a Fut body. */
class fut_conflict_error : public semantic_error
{
public:
  fut_conflict_error( std::string const& message, std::vector<std::string> histories )
      : semantic_error( message ), _histories( std::move( histories ) )
  {
  }

  std::vector<std::string> const& histories() const { return _histories; }

private:
  std::vector<std::string> _histories;
};

struct history
{
  std::string label;
  std::vector<std::string> moments; /* root first */

  bool contains( std::string const& t ) const
  {
    return std::find( moments.begin(), moments.end(), t ) != moments.end();
  }

  /* moments strictly after t along this history */
  std::vector<std::string> after( std::string const& t ) const
  {
    auto it = std::find( moments.begin(), moments.end(), t );
    if ( it == moments.end() )
      return {};
    return { std::next( it ), moments.end() };
  }
};

class branching_frame
{
public:
  using valuation = std::map<std::string, bool>;

  /*! \brief Build from moments and parent->child edges; rejects non-tree orders. */
  branching_frame( std::vector<std::string> moments, std::vector<std::pair<std::string, std::string>> const& edges )
      : _moments( std::move( moments ) )
  {
    std::set<std::string> seen;
    for ( auto const& m : _moments )
    {
      if ( !seen.insert( m ).second )
        throw semantic_error( "duplicate moment '" + m + "'" );
    }
    for ( auto const& [p, c] : edges )
    {
      if ( !seen.count( p ) || !seen.count( c ) )
        throw semantic_error( "edge " + p + "->" + c + " mentions an undeclared moment" );
      if ( _parent.count( c ) )
        throw semantic_error( "moment '" + c + "' has two predecessors " + _parent[c] + " and " + p +
                              "; the past must be linear" );
      _parent[c] = p;
      _children[p].push_back( c );
    }
    for ( auto& [_, cs] : _children )
    {
      std::sort( cs.begin(), cs.end(), [this]( auto const& a, auto const& b ) { return index_of( a ) < index_of( b ); } );
    }
    for ( auto const& m : _moments )
    {
      std::set<std::string> path{ m };
      for ( auto cur = m; _parent.count( cur ); )
      {
        cur = _parent.at( cur );
        if ( !path.insert( cur ).second )
          throw semantic_error( "cycle through moment '" + m + "'" );
      }
    }
  }

  std::vector<std::string> const& moments() const { return _moments; }
  bool has_moment( std::string const& t ) const
  {
    return std::find( _moments.begin(), _moments.end(), t ) != _moments.end();
  }

  std::optional<std::string> parent( std::string const& t ) const
  {
    auto it = _parent.find( t );
    if ( it == _parent.end() )
      return std::nullopt;
    return it->second;
  }

  /*! \brief Name histories by their leaf moment; otherwise they are h1, h2, ... in canonical order. */
  void label_history( std::string const& label, std::string const& leaf )
  {
    if ( !has_moment( leaf ) || _children.count( leaf ) )
      throw semantic_error( "history label '" + label + "' must name a leaf moment, got '" + leaf + "'" );
    _labels[leaf] = label;
  }

  /* classical value of a Fut-free atom at a moment, on every history through it */
  void set_value( std::string const& moment, std::string const& atom, bool value )
  {
    require_moment( moment );
    _shared[moment][atom] = value;
  }

  /* classical value of a Fut-free atom at a moment on one history */
  void set_value( std::string const& history_label, std::string const& moment, std::string const& atom, bool value )
  {
    require_moment( moment );
    _per_history[{ history_label, moment }][atom] = value;
  }

  std::set<std::string> domain;

  /*! \brief All maximal chains, depth-first with children in declaration order. */
  std::vector<history> histories() const
  {
    std::vector<history> out;
    std::vector<std::string> path;
    std::function<void( std::string const& )> dfs = [&]( std::string const& m ) {
      path.push_back( m );
      auto it = _children.find( m );
      if ( it == _children.end() )
        out.push_back( { {}, path } );
      else
        for ( auto const& c : it->second )
          dfs( c );
      path.pop_back();
    };
    for ( auto const& m : _moments )
    {
      if ( !_parent.count( m ) )
        dfs( m );
    }
    for ( std::size_t i = 0; i < out.size(); ++i )
    {
      auto it = _labels.find( out[i].moments.back() );
      out[i].label = it != _labels.end() ? it->second : "h" + std::to_string( i + 1 );
    }
    return out;
  }

  /*! \brief Histories through t, in canonical order. */
  std::vector<history> histories( std::string const& t ) const
  {
    require_moment( t );
    auto all = histories();
    std::vector<history> out;
    std::copy_if( all.begin(), all.end(), std::back_inserter( out ), [&]( history const& h ) { return h.contains( t ); } );
    return out;
  }

  std::optional<history> find_history( std::string const& label ) const
  {
    for ( auto& h : histories() )
    {
      if ( h.label == label )
        return h;
    }
    return std::nullopt;
  }

  /* point valuation at (h, t), per-history entries overriding shared ones */
  std::optional<bool> point_value( history const& h, std::string const& t, std::string const& atom ) const
  {
    if ( auto it = _per_history.find( { h.label, t } ); it != _per_history.end() )
    {
      if ( auto a = it->second.find( atom ); a != it->second.end() )
        return a->second;
    }
    if ( auto it = _shared.find( t ); it != _shared.end() )
    {
      if ( auto a = it->second.find( atom ); a != it->second.end() )
        return a->second;
    }
    return std::nullopt;
  }

  model point_model( history const& h, std::string const& t ) const
  {
    model m;
    m.domain = domain;
    if ( auto it = _shared.find( t ); it != _shared.end() )
    {
      for ( auto const& [a, v] : it->second )
        m.atoms[a] = v ? tv_one : tv_zero;
    }
    if ( auto it = _per_history.find( { h.label, t } ); it != _per_history.end() )
    {
      for ( auto const& [a, v] : it->second )
        m.atoms[a] = v ? tv_one : tv_zero;
    }
    return m;
  }

private:
  void require_moment( std::string const& t ) const
  {
    if ( !has_moment( t ) )
      throw semantic_error( "unknown moment '" + t + "'" );
  }

  std::size_t index_of( std::string const& m ) const
  {
    return static_cast<std::size_t>( std::find( _moments.begin(), _moments.end(), m ) - _moments.begin() );
  }

  std::vector<std::string> _moments;
  std::map<std::string, std::string> _parent;
  std::map<std::string, std::vector<std::string>> _children;
  std::map<std::string, std::string> _labels; /* leaf -> label */
  std::map<std::string, valuation> _shared;
  std::map<std::pair<std::string, std::string>, valuation> _per_history;
};

struct temporal_options
{
  /* evaluate inside one history only (retrospective reading) */
  std::optional<std::string> history;
  connective_family family = connective_family::strong_kleene;
};

namespace detail
{
inline std::vector<history> histories_in_scope( branching_frame const& frame, std::string const& t,
                                                temporal_options const& opts )
{
  auto hs = frame.histories( t );
  if ( !opts.history )
    return hs;
  auto it = std::find_if( hs.begin(), hs.end(), [&]( history const& h ) { return h.label == *opts.history; } );
  if ( it == hs.end() )
    throw semantic_error( "no history '" + *opts.history + "' through moment '" + t + "'" );
  return { *it };
}
} // namespace detail

/*! \brief Value of `Fut body` at moment t.

  1 if every history through t reaches a later moment where the body is 1;
  0 if every history reaches a later moment where it is 0; 1/2 otherwise.
  The body must be free of Fut and True. When both of the first two clauses
  hold, `fut_conflict_error` is raised with the histories on which the body
  takes both values.
*/
inline truth_value eval_fut( formula const& body, branching_frame const& frame, std::string const& t,
                             temporal_options const& opts = {} )
{
  if ( contains_kind( body, formula_kind::future ) )
    throw semantic_error( "nested Fut in '" + render( body ) + "'" );
  if ( contains_kind( body, formula_kind::true_pred ) )
    throw semantic_error( "True inside Fut in '" + render( body ) + "'" );
  auto const hs = detail::histories_in_scope( frame, t, opts );
  bool all_reach_one = true;
  bool all_reach_zero = true;
  std::vector<std::string> both;
  for ( auto const& h : hs )
  {
    bool one = false, zero = false;
    for ( auto const& later : h.after( t ) )
    {
      auto v = eval( body, frame.point_model( h, later ), connective_family::strong_kleene );
      if ( !v.is_classical() )
        throw semantic_error( "point values must be classical; '" + render( body ) + "' is 1/2 at " + h.label + "@" + later );
      ( v == tv_one ? one : zero ) = true;
    }
    all_reach_one = all_reach_one && one;
    all_reach_zero = all_reach_zero && zero;
    if ( one && zero )
      both.push_back( h.label );
  }
  if ( all_reach_one && all_reach_zero )
  {
    std::string names;
    for ( auto const& n : both )
      names += ( names.empty() ? "" : ", " ) + n;
    throw fut_conflict_error( "Fut " + render( body ) + " at " + t + " is settled both ways on histories " + names, both );
  }
  if ( all_reach_one )
    return tv_one;
  if ( all_reach_zero )
    return tv_zero;
  return tv_half;
}

namespace detail
{
class frame_evaluator
{
public:
  frame_evaluator( branching_frame const& frame, std::string t, quotation_context const& ctx, temporal_options opts )
      : _frame( frame ), _t( std::move( t ) ), _ctx( ctx ), _opts( std::move( opts ) ),
        _scope( histories_in_scope( frame, _t, _opts ) )
  {
  }

  truth_value value( formula const& f )
  {
    switch ( f.kind() )
    {
    case formula_kind::falsum:
      return tv_zero;
    case formula_kind::atom:
      return present_value( ground_atom_key( f, _env ) );
    case formula_kind::true_pred:
    {
      auto const name = resolve_term( f.args().front(), _env );
      if ( !_ctx.binds( name ) )
        throw semantic_error( "unbound sentence name '" + name + "'" );
      if ( std::find( _active.begin(), _active.end(), name ) != _active.end() )
        throw semantic_error( "ungrounded self-reference through '" + name + "' in a branching frame" );
      _active.push_back( name );
      binding_env saved;
      std::swap( saved, _env );
      auto v = value( _ctx.referent( name ) );
      std::swap( saved, _env );
      _active.pop_back();
      return v;
    }
    case formula_kind::negation:
      return neg( value( f.child() ) );
    case formula_kind::conjunction:
      return conj( value( f.lhs() ), value( f.rhs() ) );
    case formula_kind::disjunction:
      return disj( value( f.lhs() ), value( f.rhs() ) );
    case formula_kind::conditional:
    {
      auto a = value( f.lhs() );
      return cond( _opts.family, a, value( f.rhs() ) );
    }
    case formula_kind::biconditional:
    {
      auto a = value( f.lhs() );
      return bicond( _opts.family, a, value( f.rhs() ) );
    }
    case formula_kind::forall:
    case formula_kind::exists:
    {
      bool const universal = f.is( formula_kind::forall );
      truth_value acc = universal ? tv_one : tv_zero;
      for ( auto const& c : _frame.domain )
      {
        _env.emplace_back( f.symbol(), c );
        auto v = value( f.child() );
        _env.pop_back();
        acc = universal ? conj( acc, v ) : disj( acc, v );
      }
      return acc;
    }
    case formula_kind::simpliciter:
      return bochvar_simp( value( f.child() ) );
    case formula_kind::future:
    default:
      return eval_fut( close_under( f.child(), _env ), _frame, _t, _opts );
    }
  }

private:
  truth_value present_value( std::string const& key )
  {
    std::optional<bool> agreed;
    for ( auto const& h : _scope )
    {
      auto v = _frame.point_value( h, _t, key );
      if ( !v )
        throw semantic_error( "no value for '" + key + "' at " + h.label + "@" + _t );
      if ( agreed && *agreed != *v )
        throw semantic_error( "'" + key + "' differs between histories at shared moment " + _t );
      agreed = v;
    }
    return *agreed ? tv_one : tv_zero;
  }

  branching_frame const& _frame;
  std::string _t;
  quotation_context const& _ctx;
  temporal_options _opts;
  std::vector<history> _scope;
  binding_env _env;
  std::vector<std::string> _active;
};
} // namespace detail

/*! \brief Evaluate a closed formula at moment t of a frame.

  Fut subformulas use the supervaluationist clauses, compounds above them the
  strong Kleene tables, and `True(n)` the value of n's referent at t. With
  `opts.history` set, only that history is consulted, which turns the Fut
  clauses into the plain existential one.
*/
inline truth_value eval_at( formula const& f, branching_frame const& frame, std::string const& t,
                            quotation_context const& ctx = {}, temporal_options const& opts = {} )
{
  return detail::frame_evaluator( frame, t, ctx, opts ).value( f );
}

} // namespace bridgelab
