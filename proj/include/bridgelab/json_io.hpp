/*!
  \file json_io.hpp
  \brief JSON reading and writing for models, frames, sequents, verdicts and proof reports
*/

#pragma once

#include <bridgelab/consequence.hpp>
#include <bridgelab/parser.hpp>
#include <bridgelab/proof.hpp>
#include <bridgelab/semantics.hpp>
#include <bridgelab/temporal.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bridgelab
{

using json = nlohmann::json;

/* 0 and 1 as integers, 1/2 as 0.5 */
inline json to_json( truth_value v )
{
  if ( v == tv_half )
    return 0.5;
  return v == tv_one ? 1 : 0;
}

inline truth_value truth_value_from_json( json const& j )
{
  if ( j.is_boolean() )
    return j.get<bool>() ? tv_one : tv_zero;
  if ( !j.is_number() )
    throw semantic_error( "truth value must be 0, 0.5 or 1, got " + j.dump() );
  try
  {
    return truth_value::from_double( j.get<double>() );
  }
  catch ( std::invalid_argument const& )
  {
    throw semantic_error( "truth value must be 0, 0.5 or 1, got " + j.dump() );
  }
}

/*! \brief Canonical key of a ground atom written as text: `Says(a, b)` becomes `Says(a,b)`. */
inline std::string normalise_atom_key( std::string const& text, quotation_context const& ctx = {} )
{
  auto f = parse( text, ctx );
  if ( f.is( formula_kind::future ) && f.child().is( formula_kind::atom ) )
    return "Fut " + detail::ground_atom_key( f.child(), {} );
  if ( f.is( formula_kind::atom ) )
    return detail::ground_atom_key( f, {} );
  if ( f.is( formula_kind::true_pred ) )
    return true_key( f.args().front().name );
  throw semantic_error( "'" + text + "' is not a ground atom" );
}

inline json names_to_json( quotation_context const& ctx )
{
  json names = json::object();
  for ( auto const& [n, body] : ctx.names )
    names[n] = render( body );
  return names;
}

/* `names` is an object of sentence names; `defines` an optional object of abbreviations */
inline quotation_context context_from_json( json const& j )
{
  std::string text;
  if ( j.contains( "domain" ) )
  {
    text += "domain";
    for ( auto const& c : j.at( "domain" ) )
      text += " " + c.get<std::string>();
    text += "\n";
  }
  if ( j.contains( "names" ) )
  {
    for ( auto const& [n, body] : j.at( "names" ).items() )
      text += "name " + n + " := " + body.get<std::string>() + "\n";
  }
  if ( j.contains( "defines" ) )
  {
    /* JSON objects are unordered: emit each definition after the ones it mentions */
    std::map<std::string, std::string> pending;
    for ( auto const& [n, body] : j.at( "defines" ).items() )
      pending[n] = body.get<std::string>();
    while ( !pending.empty() )
    {
      auto ready = std::find_if( pending.begin(), pending.end(), [&]( auto const& kv ) {
        for ( auto const& t : detail::tokenize( kv.second ) )
        {
          if ( t.kind == detail::token_kind::ident && t.text != kv.first && pending.count( t.text ) )
            return false;
        }
        return true;
      } );
      if ( ready == pending.end() )
        throw parse_error( parse_error::reason::syntax, 0, "cyclic definitions among 'defines'" );
      text += "define " + ready->first + " := " + ready->second + "\n";
      pending.erase( ready );
    }
  }
  return parse_context( text );
}

inline json to_json( model const& m )
{
  json j;
  j["domain"] = m.domain;
  json atoms = json::object();
  for ( auto const& [k, v] : m.atoms )
    atoms[k] = to_json( v );
  j["atoms"] = atoms;
  j["names"] = names_to_json( m.ctx );
  if ( !m.ctx.abbreviations.empty() )
  {
    json defines = json::object();
    for ( auto const& [n, body] : m.ctx.abbreviations )
      defines[n] = render_folded( body, m.ctx );
    j["defines"] = defines;
  }
  j["transparent"] = m.transparent;
  return j;
}

inline model model_from_json( json const& j )
{
  model m;
  m.ctx = context_from_json( j );
  if ( j.contains( "domain" ) )
    m.domain = j.at( "domain" ).get<std::set<std::string>>();
  m.transparent = j.value( "transparent", false );
  if ( j.contains( "atoms" ) )
  {
    for ( auto const& [k, v] : j.at( "atoms" ).items() )
      m.atoms[normalise_atom_key( k, m.ctx )] = truth_value_from_json( v );
  }
  return m;
}

/*! \brief Frame file.

      {"moments": ["t0","t1","t2"], "edges": [["t0","t1"],["t0","t2"]],
       "histories": {"h": "t1", "h'": "t2"}, "domain": ["a"],
       "valuation": {"h@t1": {"Pun(a)": 1}, "t0": {"Pun(a)": 0}}}

  A valuation key `label@moment` sets values on one history only; a bare
  moment sets them on every history through it.
*/
inline branching_frame frame_from_json( json const& j )
{
  std::vector<std::pair<std::string, std::string>> edges;
  for ( auto const& e : j.at( "edges" ) )
    edges.emplace_back( e.at( 0 ).get<std::string>(), e.at( 1 ).get<std::string>() );
  branching_frame frame( j.at( "moments" ).get<std::vector<std::string>>(), edges );
  if ( j.contains( "domain" ) )
    frame.domain = j.at( "domain" ).get<std::set<std::string>>();
  if ( j.contains( "histories" ) )
  {
    for ( auto const& [label, leaf] : j.at( "histories" ).items() )
      frame.label_history( label, leaf.get<std::string>() );
  }
  if ( j.contains( "valuation" ) )
  {
    for ( auto const& [where, atoms] : j.at( "valuation" ).items() )
    {
      auto const at = where.find( '@' );
      for ( auto const& [k, v] : atoms.items() )
      {
        auto const value = truth_value_from_json( v );
        if ( !value.is_classical() )
          throw semantic_error( "frame point values must be classical, got 0.5 for '" + k + "' at " + where );
        auto const key = normalise_atom_key( k );
        if ( at == std::string::npos )
          frame.set_value( where, key, value == tv_one );
        else
          frame.set_value( where.substr( 0, at ), where.substr( at + 1 ), key, value == tv_one );
      }
    }
  }
  return frame;
}

struct sequent_file
{
  sequent seq;
  std::optional<relation> rel;
  std::optional<connective_family> family;
};

/*! \brief Sequent file: premises, conclusion, relation, family, transparent, names, domain, fixed. */
inline sequent_file sequent_from_json( json const& j )
{
  sequent_file out;
  auto& s = out.seq;
  s.ctx = context_from_json( j );
  s.transparent = j.value( "transparent", false );
  if ( j.contains( "domain" ) )
    s.sig.domain = j.at( "domain" ).get<std::set<std::string>>();
  if ( j.contains( "premises" ) )
  {
    for ( auto const& p : j.at( "premises" ) )
      s.premises.push_back( parse( p.get<std::string>(), s.ctx ) );
  }
  s.conclusion = parse( j.at( "conclusion" ).get<std::string>(), s.ctx );
  if ( j.contains( "fixed" ) )
  {
    for ( auto const& [k, v] : j.at( "fixed" ).items() )
      s.sig.fixed[normalise_atom_key( k, s.ctx )] = truth_value_from_json( v );
  }
  if ( j.contains( "relation" ) )
  {
    auto const text = j.at( "relation" ).get<std::string>();
    out.rel = parse_relation( text );
    if ( !out.rel )
      throw parse_error( parse_error::reason::syntax, 0, "unknown relation '" + text + "'" );
  }
  if ( j.contains( "family" ) )
  {
    auto const text = j.at( "family" ).get<std::string>();
    out.family = parse_family( text );
    if ( !out.family )
      throw parse_error( parse_error::reason::syntax, 0, "unknown connective family '" + text + "'" );
  }
  return out;
}

/* the countermodel lists only the atoms the sequent depends on */
inline json to_json( verdict const& v )
{
  json j;
  j["valid"] = v.valid;
  j["modelsChecked"] = v.models_checked;
  if ( v.countermodel )
  {
    json atoms = json::object();
    for ( auto const& [k, val] : v.countermodel->atoms )
      atoms[k] = to_json( val );
    j["countermodel"] = atoms;
  }
  else
    j["countermodel"] = nullptr;
  return j;
}

inline json to_json( proof_report const& r )
{
  json j;
  j["proof"] = r.name;
  json steps = json::array();
  for ( auto const& s : r.steps )
  {
    json step;
    step["id"] = s.id;
    step["rule"] = std::string( to_string( s.r ) );
    step["depth"] = s.depth;
    step["conclusion"] = render( s.conclusion );
    step["localSequent"] = render( s.local );
    step["contextSequent"] = render( s.context );
    step["syntacticOk"] = s.syntactic_ok;
    if ( !s.message.empty() )
      step["message"] = s.message;
    json per = json::object();
    for ( auto const& [rel, v] : s.per_relation )
      per[std::string( to_string( rel ) )] = to_json( v );
    step["perRelation"] = per;
    steps.push_back( step );
  }
  j["steps"] = steps;
  j["rootSequent"] = render( r.root_sequent );
  json roots = json::object();
  json failures = json::object();
  for ( auto const& [rel, v] : r.root_verdicts )
    roots[std::string( to_string( rel ) )] = to_json( v );
  for ( auto const& s : r.steps )
  {
    for ( auto const& [rel, _] : s.per_relation )
    {
      auto const key = std::string( to_string( rel ) );
      if ( !failures.contains( key ) )
      {
        auto f = r.first_failure( rel );
        failures[key] = f ? json( *f ) : json( nullptr );
      }
    }
  }
  j["rootVerdicts"] = roots;
  j["firstFailure"] = failures;
  return j;
}

inline json to_json( agreement_report const& r )
{
  json j;
  j["atoms"] = r.atoms;
  j["depth"] = r.depth;
  j["poolSize"] = r.pool_size;
  j["sequentsChecked"] = r.sequents_checked;
  j["validCounts"] = r.valid_counts;
  j["stClDisagreements"] = r.st_cl_disagreements;
  j["ssNotSt"] = r.ss_not_st;
  j["tsNotSs"] = r.ts_not_ss;
  j["tsNotTt"] = r.ts_not_tt;
  j["examples"] = r.examples;
  j["clean"] = r.clean();
  j["note"] = "empirical: bounded pool, strong Kleene, no truth predicate";
  return j;
}

} // namespace bridgelab
