/*!
  \file formula.hpp
  \brief Terms, formulas and quotation contexts of the object language

  Formulas are immutable trees with shared structure; copying a formula is
  a reference-count bump.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridgelab
{

struct term
{
  enum class sort
  {
    constant,
    variable
  };

  std::string name;
  sort kind = sort::constant;

  static term constant( std::string name ) { return { std::move( name ), sort::constant }; }
  static term variable( std::string name ) { return { std::move( name ), sort::variable }; }

  bool is_variable() const { return kind == sort::variable; }

  auto operator<=>( term const& ) const = default;
};

enum class formula_kind
{
  falsum,
  atom,
  true_pred,
  negation,
  conjunction,
  disjunction,
  conditional,
  biconditional,
  forall,
  exists,
  future,
  simpliciter
};

class formula;

namespace detail
{
struct formula_node;
}

class formula
{
public:
  /* default-constructed formula is falsum */
  formula();

  static formula falsum();
  static formula atom( std::string predicate, std::vector<term> args = {} );
  static formula true_pred( term arg );
  static formula negation( formula f );
  static formula conjunction( formula a, formula b );
  static formula disjunction( formula a, formula b );
  static formula conditional( formula a, formula b );
  static formula biconditional( formula a, formula b );
  static formula forall( std::string var, formula body );
  static formula exists( std::string var, formula body );
  static formula future( formula f );
  static formula simpliciter( formula f );

  formula_kind kind() const;

  /* predicate name for atoms, bound variable for quantifiers, empty otherwise */
  std::string const& symbol() const;
  /* arguments of atoms; the single argument of true_pred */
  std::vector<term> const& args() const;
  std::vector<formula> const& children() const;

  formula const& child( std::size_t i = 0 ) const { return children().at( i ); }
  formula const& lhs() const { return child( 0 ); }
  formula const& rhs() const { return child( 1 ); }

  bool is_binary() const;
  bool is_quantifier() const;
  bool is( formula_kind k ) const { return kind() == k; }

  friend bool operator==( formula const& a, formula const& b );
  friend std::strong_ordering operator<=>( formula const& a, formula const& b );

private:
  explicit formula( std::shared_ptr<const detail::formula_node> node )
      : _node( std::move( node ) )
  {
  }

  std::shared_ptr<const detail::formula_node> _node;
};

namespace detail
{
struct formula_node
{
  formula_kind kind = formula_kind::falsum;
  std::string symbol;
  std::vector<term> args;
  std::vector<formula> children;
};

inline std::shared_ptr<const formula_node> const& falsum_node()
{
  static auto const node = std::make_shared<const formula_node>();
  return node;
}
} // namespace detail

inline formula::formula() : _node( detail::falsum_node() ) {}

inline formula formula::falsum() { return formula(); }

inline formula formula::atom( std::string predicate, std::vector<term> args )
{
  return formula( std::make_shared<const detail::formula_node>(
      detail::formula_node{ formula_kind::atom, std::move( predicate ), std::move( args ), {} } ) );
}

inline formula formula::true_pred( term arg )
{
  return formula( std::make_shared<const detail::formula_node>(
      detail::formula_node{ formula_kind::true_pred, {}, { std::move( arg ) }, {} } ) );
}

#define BRIDGELAB_UNARY( fn, k )                                                     \
  inline formula formula::fn( formula f )                                            \
  {                                                                                  \
    return formula( std::make_shared<const detail::formula_node>(                    \
        detail::formula_node{ formula_kind::k, {}, {}, { std::move( f ) } } ) );     \
  }
#define BRIDGELAB_BINARY( fn, k )                                                          \
  inline formula formula::fn( formula a, formula b )                                       \
  {                                                                                        \
    return formula( std::make_shared<const detail::formula_node>(                          \
        detail::formula_node{ formula_kind::k, {}, {}, { std::move( a ), std::move( b ) } } ) ); \
  }

BRIDGELAB_UNARY( negation, negation )
BRIDGELAB_UNARY( future, future )
BRIDGELAB_UNARY( simpliciter, simpliciter )
BRIDGELAB_BINARY( conjunction, conjunction )
BRIDGELAB_BINARY( disjunction, disjunction )
BRIDGELAB_BINARY( conditional, conditional )
BRIDGELAB_BINARY( biconditional, biconditional )

#undef BRIDGELAB_UNARY
#undef BRIDGELAB_BINARY

inline formula formula::forall( std::string var, formula body )
{
  return formula( std::make_shared<const detail::formula_node>(
      detail::formula_node{ formula_kind::forall, std::move( var ), {}, { std::move( body ) } } ) );
}

inline formula formula::exists( std::string var, formula body )
{
  return formula( std::make_shared<const detail::formula_node>(
      detail::formula_node{ formula_kind::exists, std::move( var ), {}, { std::move( body ) } } ) );
}

inline formula_kind formula::kind() const { return _node->kind; }
inline std::string const& formula::symbol() const { return _node->symbol; }
inline std::vector<term> const& formula::args() const { return _node->args; }
inline std::vector<formula> const& formula::children() const { return _node->children; }

inline bool formula::is_binary() const
{
  switch ( kind() )
  {
  case formula_kind::conjunction:
  case formula_kind::disjunction:
  case formula_kind::conditional:
  case formula_kind::biconditional:
    return true;
  default:
    return false;
  }
}

inline bool formula::is_quantifier() const
{
  return kind() == formula_kind::forall || kind() == formula_kind::exists;
}

inline std::strong_ordering operator<=>( formula const& a, formula const& b )
{
  if ( a._node == b._node )
    return std::strong_ordering::equal;
  if ( auto c = a.kind() <=> b.kind(); c != 0 )
    return c;
  if ( auto c = a.symbol() <=> b.symbol(); c != 0 )
    return c;
  if ( auto c = a.args() <=> b.args(); c != 0 )
    return c;
  auto const& ca = a.children();
  auto const& cb = b.children();
  for ( std::size_t i = 0; i < ca.size() && i < cb.size(); ++i )
  {
    if ( auto c = ca[i] <=> cb[i]; c != 0 )
      return c;
  }
  return ca.size() <=> cb.size();
}

inline bool operator==( formula const& a, formula const& b )
{
  return ( a <=> b ) == 0;
}

/* convenience builders */
inline formula operator~( formula f ) { return formula::negation( std::move( f ) ); }
inline formula operator&( formula a, formula b ) { return formula::conjunction( std::move( a ), std::move( b ) ); }
inline formula operator|( formula a, formula b ) { return formula::disjunction( std::move( a ), std::move( b ) ); }

/*! \brief Sentence names bound to closed formulas, plus defined abbreviations.

  Names are quotation constants: `True(b)` talks about the sentence bound to `b`.
  Self-reference is allowed; lookup is a single map access and never unfolds.
  Abbreviations (`define phi := ...`) are expanded by the parser and leave no
  trace in the AST.
*/
struct quotation_context
{
  std::map<std::string, formula> names;
  std::map<std::string, formula> abbreviations;
  /* declared individual constants; empty means "any free identifier is a constant" */
  std::set<std::string> constants;

  bool binds( std::string const& name ) const { return names.count( name ) != 0u; }

  formula const& referent( std::string const& name ) const
  {
    auto it = names.find( name );
    if ( it == names.end() )
    {
      throw std::out_of_range( "unbound sentence name '" + name + "'" );
    }
    return it->second;
  }
};

/*! \brief Canonical text.

  Binary operands that are themselves binary or quantified are parenthesised;
  the outermost formula and quantifier bodies are not. The output parses back
  to the same tree.
*/
std::string render( formula const& f );

namespace detail
{
inline std::string render_term_list( std::vector<term> const& args )
{
  std::string s;
  for ( std::size_t i = 0; i < args.size(); ++i )
  {
    if ( i )
      s += ',';
    s += args[i].name;
  }
  return s;
}

inline std::string binary_op( formula_kind k )
{
  switch ( k )
  {
  case formula_kind::conjunction:
    return " & ";
  case formula_kind::disjunction:
    return " | ";
  case formula_kind::conditional:
    return " -> ";
  default:
    return " <-> ";
  }
}

inline std::string render_operand( formula const& f )
{
  if ( f.is_binary() || f.is_quantifier() )
    return "(" + render( f ) + ")";
  return render( f );
}
} // namespace detail

inline std::string render( formula const& f )
{
  switch ( f.kind() )
  {
  case formula_kind::falsum:
    return "_|_";
  case formula_kind::atom:
    if ( f.args().empty() )
      return f.symbol();
    return f.symbol() + "(" + detail::render_term_list( f.args() ) + ")";
  case formula_kind::true_pred:
    return "True(" + f.args().front().name + ")";
  case formula_kind::negation:
    return "~" + detail::render_operand( f.child() );
  case formula_kind::future:
    return "Fut " + detail::render_operand( f.child() );
  case formula_kind::simpliciter:
    return "Simp " + detail::render_operand( f.child() );
  case formula_kind::forall:
    return "forall " + f.symbol() + ". " + render( f.child() );
  case formula_kind::exists:
    return "exists " + f.symbol() + ". " + render( f.child() );
  default:
    return detail::render_operand( f.lhs() ) + detail::binary_op( f.kind() ) + detail::render_operand( f.rhs() );
  }
}

/*! \brief Render, folding any subformula equal to an abbreviation back into its name. */
inline std::string render_folded( formula const& f, quotation_context const& ctx )
{
  for ( auto const& [name, body] : ctx.abbreviations )
  {
    if ( body == f )
      return name;
  }
  auto operand = [&]( formula const& g ) {
    auto const text = render_folded( g, ctx );
    bool const folded = std::any_of( ctx.abbreviations.begin(), ctx.abbreviations.end(),
                                     [&]( auto const& kv ) { return kv.second == g; } );
    if ( !folded && ( g.is_binary() || g.is_quantifier() ) )
      return "(" + text + ")";
    return text;
  };
  switch ( f.kind() )
  {
  case formula_kind::negation:
    return "~" + operand( f.child() );
  case formula_kind::future:
    return "Fut " + operand( f.child() );
  case formula_kind::simpliciter:
    return "Simp " + operand( f.child() );
  case formula_kind::forall:
    return "forall " + f.symbol() + ". " + render_folded( f.child(), ctx );
  case formula_kind::exists:
    return "exists " + f.symbol() + ". " + render_folded( f.child(), ctx );
  case formula_kind::conjunction:
  case formula_kind::disjunction:
  case formula_kind::conditional:
  case formula_kind::biconditional:
    return operand( f.lhs() ) + detail::binary_op( f.kind() ) + operand( f.rhs() );
  default:
    return render( f );
  }
}

/*! \brief Replace the free occurrences of variable `var` by the constant `t`.

  Occurrences under a binder for the same variable are left untouched. Only
  constants may be substituted, so capture cannot happen.
*/
inline formula instantiate( formula const& f, std::string const& var, term const& t )
{
  if ( t.is_variable() )
  {
    throw std::invalid_argument( "instantiate: cannot substitute variable '" + t.name + "', only constants" );
  }
  auto subst_terms = [&]( std::vector<term> const& args ) {
    std::vector<term> out = args;
    for ( auto& a : out )
    {
      if ( a.is_variable() && a.name == var )
        a = t;
    }
    return out;
  };
  switch ( f.kind() )
  {
  case formula_kind::falsum:
    return f;
  case formula_kind::atom:
    return formula::atom( f.symbol(), subst_terms( f.args() ) );
  case formula_kind::true_pred:
    return formula::true_pred( subst_terms( f.args() ).front() );
  case formula_kind::negation:
    return formula::negation( instantiate( f.child(), var, t ) );
  case formula_kind::future:
    return formula::future( instantiate( f.child(), var, t ) );
  case formula_kind::simpliciter:
    return formula::simpliciter( instantiate( f.child(), var, t ) );
  case formula_kind::forall:
  case formula_kind::exists:
    if ( f.symbol() == var )
      return f;
    return f.is( formula_kind::forall ) ? formula::forall( f.symbol(), instantiate( f.child(), var, t ) )
                                        : formula::exists( f.symbol(), instantiate( f.child(), var, t ) );
  case formula_kind::conjunction:
    return formula::conjunction( instantiate( f.lhs(), var, t ), instantiate( f.rhs(), var, t ) );
  case formula_kind::disjunction:
    return formula::disjunction( instantiate( f.lhs(), var, t ), instantiate( f.rhs(), var, t ) );
  case formula_kind::conditional:
    return formula::conditional( instantiate( f.lhs(), var, t ), instantiate( f.rhs(), var, t ) );
  case formula_kind::biconditional:
  default:
    return formula::biconditional( instantiate( f.lhs(), var, t ), instantiate( f.rhs(), var, t ) );
  }
}

namespace detail
{
inline void collect_free_variables( formula const& f, std::vector<std::string>& bound, std::set<std::string>& out )
{
  auto visit_terms = [&]( std::vector<term> const& args ) {
    for ( auto const& a : args )
    {
      if ( a.is_variable() && std::find( bound.begin(), bound.end(), a.name ) == bound.end() )
        out.insert( a.name );
    }
  };
  switch ( f.kind() )
  {
  case formula_kind::atom:
  case formula_kind::true_pred:
    visit_terms( f.args() );
    return;
  case formula_kind::forall:
  case formula_kind::exists:
    bound.push_back( f.symbol() );
    collect_free_variables( f.child(), bound, out );
    bound.pop_back();
    return;
  default:
    for ( auto const& c : f.children() )
      collect_free_variables( c, bound, out );
  }
}

inline void collect_constants( formula const& f, std::set<std::string>& out )
{
  for ( auto const& a : f.args() )
  {
    if ( !a.is_variable() )
      out.insert( a.name );
  }
  for ( auto const& c : f.children() )
    collect_constants( c, out );
}
} // namespace detail

inline std::set<std::string> free_variables( formula const& f )
{
  std::vector<std::string> bound;
  std::set<std::string> out;
  detail::collect_free_variables( f, bound, out );
  return out;
}

inline bool is_closed( formula const& f ) { return free_variables( f ).empty(); }

inline std::set<std::string> constants_of( formula const& f )
{
  std::set<std::string> out;
  detail::collect_constants( f, out );
  return out;
}

inline bool contains_kind( formula const& f, formula_kind k )
{
  if ( f.kind() == k )
    return true;
  return std::any_of( f.children().begin(), f.children().end(),
                      [k]( formula const& c ) { return contains_kind( c, k ); } );
}

inline std::size_t depth( formula const& f )
{
  std::size_t d = 0;
  for ( auto const& c : f.children() )
    d = std::max( d, depth( c ) + 1 );
  return d;
}

} // namespace bridgelab
