/*!
  \file parser.hpp
  \brief Recursive-descent parser for the ASCII formula grammar and context files

  Grammar, lowest precedence first:

      formula  := quant | iff
      quant    := ("forall" | "exists") IDENT "." formula
      iff      := imp ("<->" imp)*          left-associative
      imp      := or ("->" imp)?            right-associative
      or       := and ("|" and)*
      and      := unary ("&" unary)*
      unary    := "~" unary | "Fut" unary | "Simp" unary | atom
      atom     := "_|_" | "True" "(" term ")" | IDENT "(" term ("," term)* ")"
                | IDENT | "(" formula ")"

  A bare IDENT is a propositional atom, or the expansion of an abbreviation
  when the context defines one under that name. Quantifiers are accepted
  wherever a unary operand is, and extend as far right as possible.
*/

#pragma once

#include <bridgelab/formula.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bridgelab
{

class parse_error : public std::runtime_error
{
public:
  enum class reason
  {
    syntax,
    unbound_name,
    unbound_variable
  };

  parse_error( reason why, std::size_t position, std::string const& message )
      : std::runtime_error( "at " + std::to_string( position ) + ": " + message ),
        _why( why ),
        _position( position )
  {
  }

  reason why() const { return _why; }
  std::size_t position() const { return _position; }

private:
  reason _why;
  std::size_t _position;
};

namespace detail
{

enum class token_kind
{
  ident,
  kw_forall,
  kw_exists,
  kw_fut,
  kw_simp,
  kw_true,
  falsum,
  not_,
  and_,
  or_,
  imp,
  iff,
  dot,
  comma,
  lparen,
  rparen,
  end
};

struct token
{
  token_kind kind;
  std::string text;
  std::size_t pos;
};

inline std::string describe( token_kind k )
{
  switch ( k )
  {
  case token_kind::ident:
    return "identifier";
  case token_kind::kw_forall:
    return "'forall'";
  case token_kind::kw_exists:
    return "'exists'";
  case token_kind::kw_fut:
    return "'Fut'";
  case token_kind::kw_simp:
    return "'Simp'";
  case token_kind::kw_true:
    return "'True'";
  case token_kind::falsum:
    return "'_|_'";
  case token_kind::not_:
    return "'~'";
  case token_kind::and_:
    return "'&'";
  case token_kind::or_:
    return "'|'";
  case token_kind::imp:
    return "'->'";
  case token_kind::iff:
    return "'<->'";
  case token_kind::dot:
    return "'.'";
  case token_kind::comma:
    return "','";
  case token_kind::lparen:
    return "'('";
  case token_kind::rparen:
    return "')'";
  default:
    return "end of input";
  }
}

inline std::vector<token> tokenize( std::string_view text )
{
  std::vector<token> out;
  std::size_t i = 0;
  auto starts = [&]( std::string_view s ) { return text.substr( i, s.size() ) == s; };
  while ( i < text.size() )
  {
    unsigned char const c = static_cast<unsigned char>( text[i] );
    if ( std::isspace( c ) )
    {
      ++i;
      continue;
    }
    std::size_t const start = i;
    if ( starts( "_|_" ) )
    {
      out.push_back( { token_kind::falsum, "_|_", start } );
      i += 3;
    }
    else if ( starts( "<->" ) )
    {
      out.push_back( { token_kind::iff, "<->", start } );
      i += 3;
    }
    else if ( starts( "->" ) )
    {
      out.push_back( { token_kind::imp, "->", start } );
      i += 2;
    }
    else if ( std::isalpha( c ) )
    {
      while ( i < text.size() && ( std::isalnum( static_cast<unsigned char>( text[i] ) ) || text[i] == '_' ) )
        ++i;
      std::string word( text.substr( start, i - start ) );
      token_kind k = token_kind::ident;
      if ( word == "forall" )
        k = token_kind::kw_forall;
      else if ( word == "exists" )
        k = token_kind::kw_exists;
      else if ( word == "Fut" )
        k = token_kind::kw_fut;
      else if ( word == "Simp" )
        k = token_kind::kw_simp;
      else if ( word == "True" )
        k = token_kind::kw_true;
      out.push_back( { k, std::move( word ), start } );
    }
    else
    {
      token_kind k;
      switch ( c )
      {
      case '~':
        k = token_kind::not_;
        break;
      case '&':
        k = token_kind::and_;
        break;
      case '|':
        k = token_kind::or_;
        break;
      case '.':
        k = token_kind::dot;
        break;
      case ',':
        k = token_kind::comma;
        break;
      case '(':
        k = token_kind::lparen;
        break;
      case ')':
        k = token_kind::rparen;
        break;
      default:
        throw parse_error( parse_error::reason::syntax, start,
                           std::string( "unexpected character '" ) + text[i] + "'" );
      }
      out.push_back( { k, std::string( 1, text[i] ), start } );
      ++i;
    }
  }
  out.push_back( { token_kind::end, "", text.size() } );
  return out;
}

class formula_parser
{
public:
  formula_parser( std::string_view text, quotation_context const& ctx )
      : _tokens( tokenize( text ) ), _ctx( ctx )
  {
  }

  formula parse_all()
  {
    auto f = parse_formula();
    expect( token_kind::end );
    return f;
  }

private:
  token const& peek() const { return _tokens[_pos]; }
  bool at( token_kind k ) const { return peek().kind == k; }

  token const& advance() { return _tokens[_pos++]; }

  [[noreturn]] void fail( std::string const& what ) const
  {
    throw parse_error( parse_error::reason::syntax, peek().pos,
                       "expected " + what + ", found " +
                           ( at( token_kind::end ) ? std::string( "end of input" ) : "'" + peek().text + "'" ) );
  }

  token const& expect( token_kind k )
  {
    if ( !at( k ) )
      fail( describe( k ) );
    return advance();
  }

  formula parse_formula()
  {
    if ( at( token_kind::kw_forall ) || at( token_kind::kw_exists ) )
      return parse_quantifier();
    return parse_iff();
  }

  formula parse_quantifier()
  {
    bool const universal = advance().kind == token_kind::kw_forall;
    auto const& var = expect( token_kind::ident );
    std::string name = var.text;
    expect( token_kind::dot );
    _bound.push_back( name );
    auto body = parse_formula();
    _bound.pop_back();
    return universal ? formula::forall( std::move( name ), std::move( body ) )
                     : formula::exists( std::move( name ), std::move( body ) );
  }

  formula parse_iff()
  {
    auto f = parse_imp();
    while ( at( token_kind::iff ) )
    {
      advance();
      f = formula::biconditional( std::move( f ), parse_imp() );
    }
    return f;
  }

  formula parse_imp()
  {
    auto f = parse_or();
    if ( at( token_kind::imp ) )
    {
      advance();
      return formula::conditional( std::move( f ), parse_imp() );
    }
    return f;
  }

  formula parse_or()
  {
    auto f = parse_and();
    while ( at( token_kind::or_ ) )
    {
      advance();
      f = formula::disjunction( std::move( f ), parse_and() );
    }
    return f;
  }

  formula parse_and()
  {
    auto f = parse_unary();
    while ( at( token_kind::and_ ) )
    {
      advance();
      f = formula::conjunction( std::move( f ), parse_unary() );
    }
    return f;
  }

  formula parse_unary()
  {
    switch ( peek().kind )
    {
    case token_kind::not_:
      advance();
      return formula::negation( parse_unary() );
    case token_kind::kw_fut:
      advance();
      return formula::future( parse_unary() );
    case token_kind::kw_simp:
      advance();
      return formula::simpliciter( parse_unary() );
    case token_kind::kw_forall:
    case token_kind::kw_exists:
      return parse_quantifier();
    default:
      return parse_atom();
    }
  }

  bool is_bound( std::string const& name ) const
  {
    return std::find( _bound.rbegin(), _bound.rend(), name ) != _bound.rend();
  }

  term parse_term()
  {
    auto const& tok = expect( token_kind::ident );
    if ( is_bound( tok.text ) )
      return term::variable( tok.text );
    if ( !_ctx.constants.empty() && !_ctx.constants.count( tok.text ) && !_ctx.binds( tok.text ) )
    {
      throw parse_error( parse_error::reason::unbound_variable, tok.pos,
                         "unbound variable '" + tok.text + "' (not a binder, declared constant or sentence name)" );
    }
    return term::constant( tok.text );
  }

  formula parse_atom()
  {
    switch ( peek().kind )
    {
    case token_kind::falsum:
      advance();
      return formula::falsum();
    case token_kind::kw_true:
    {
      advance();
      expect( token_kind::lparen );
      auto const pos = peek().pos;
      auto t = parse_term();
      if ( !t.is_variable() && !_ctx.binds( t.name ) && !_ctx.constants.count( t.name ) )
      {
        throw parse_error( parse_error::reason::unbound_name, pos, "unbound sentence name '" + t.name + "'" );
      }
      expect( token_kind::rparen );
      return formula::true_pred( std::move( t ) );
    }
    case token_kind::lparen:
    {
      advance();
      auto f = parse_formula();
      expect( token_kind::rparen );
      return f;
    }
    case token_kind::ident:
    {
      auto const& name = advance();
      if ( !at( token_kind::lparen ) )
      {
        if ( auto it = _ctx.abbreviations.find( name.text ); it != _ctx.abbreviations.end() )
          return it->second;
        return formula::atom( name.text );
      }
      advance();
      std::vector<term> args;
      args.push_back( parse_term() );
      while ( at( token_kind::comma ) )
      {
        advance();
        args.push_back( parse_term() );
      }
      expect( token_kind::rparen );
      return formula::atom( name.text, std::move( args ) );
    }
    default:
      fail( "formula" );
    }
  }

  std::vector<token> _tokens;
  std::size_t _pos = 0;
  quotation_context const& _ctx;
  std::vector<std::string> _bound;
};

inline std::string trim( std::string_view s )
{
  auto b = s.find_first_not_of( " \t\r\n" );
  if ( b == std::string_view::npos )
    return {};
  auto e = s.find_last_not_of( " \t\r\n" );
  return std::string( s.substr( b, e - b + 1 ) );
}

} // namespace detail

/*! \brief Parse a formula against a quotation context.

  Throws `parse_error` carrying the byte offset of the offending token; a
  truncated input reports the end-of-input offset.
*/
inline formula parse( std::string_view text, quotation_context const& ctx = {} )
{
  return detail::formula_parser( text, ctx ).parse_all();
}

/*! \brief Parse a context file.

  One declaration per line; `#` starts a comment.

      name b := Fut Pun(a)       sentence name (may refer to itself via True)
      define phi := A & B        abbreviation, expanded wherever `phi` occurs
      domain a b                 declared individual constants

  All sentence names are registered before any body is parsed, so bodies may
  mention names declared later. Abbreviations are visible from the line after
  their definition.
*/
inline quotation_context parse_context( std::string_view text, quotation_context ctx = {} )
{
  struct decl
  {
    std::string keyword, name, body;
    std::size_t line;
  };
  std::vector<decl> decls;
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
    if ( keyword == "domain" )
    {
      std::string c;
      while ( words >> c )
        ctx.constants.insert( c );
      continue;
    }
    if ( keyword != "name" && keyword != "define" )
    {
      throw parse_error( parse_error::reason::syntax, 0,
                         "line " + std::to_string( lineno ) + ": unknown declaration '" + keyword + "'" );
    }
    auto const assign = stripped.find( ":=" );
    if ( assign == std::string::npos )
    {
      throw parse_error( parse_error::reason::syntax, 0, "line " + std::to_string( lineno ) + ": missing ':='" );
    }
    auto name = detail::trim( std::string_view( stripped ).substr( keyword.size(), assign - keyword.size() ) );
    if ( name.empty() )
    {
      throw parse_error( parse_error::reason::syntax, 0, "line " + std::to_string( lineno ) + ": missing name" );
    }
    decls.push_back( { keyword, name, detail::trim( std::string_view( stripped ).substr( assign + 2 ) ), lineno } );
  }

  for ( auto const& d : decls )
  {
    if ( d.keyword == "name" )
      ctx.names.emplace( d.name, formula::falsum() );
  }
  if ( !ctx.constants.empty() )
  {
    for ( auto const& [n, _] : ctx.names )
      ctx.constants.insert( n );
  }
  for ( auto const& d : decls )
  {
    formula body;
    try
    {
      body = parse( d.body, ctx );
    }
    catch ( parse_error const& e )
    {
      throw parse_error( e.why(), e.position(), "line " + std::to_string( d.line ) + ": " + e.what() );
    }
    if ( !is_closed( body ) )
    {
      throw parse_error( parse_error::reason::unbound_variable, 0,
                         "line " + std::to_string( d.line ) + ": '" + d.name + "' must be bound to a closed formula" );
    }
    if ( d.keyword == "name" )
      ctx.names[d.name] = body;
    else
      ctx.abbreviations[d.name] = body;
  }
  return ctx;
}

} // namespace bridgelab
