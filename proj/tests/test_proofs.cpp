#include <bridgelab/builtin_proofs.hpp>
#include <bridgelab/json_io.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace bridgelab;

namespace
{
constexpr auto sk = connective_family::strong_kleene;
constexpr auto cooper = connective_family::cooper;

proof_report run( std::string_view name, std::vector<relation> rels, std::optional<connective_family> fam = {},
                  std::optional<bool> transparent = {} )
{
  proof_check_options opts;
  opts.relations = std::move( rels );
  opts.family = fam;
  opts.transparent = transparent;
  return check_proof( builtin_proof( name ), opts );
}

std::vector<std::string> failing( proof_report const& r, relation rel )
{
  std::vector<std::string> out;
  for ( auto const& s : r.steps )
    if ( !s.per_relation.at( rel ).valid )
      out.push_back( s.id );
  return out;
}

step_report const& step_of( proof_report const& r, std::string const& id )
{
  for ( auto const& s : r.steps )
    if ( s.id == id )
      return s;
  throw std::out_of_range( id );
}

std::string slurp( std::string const& path )
{
  std::ifstream in( path );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
} // namespace

TEST( Proofs, BuiltinScriptsAreCanonical )
{
  for ( auto name : builtin_proof_names() )
  {
    auto const text = std::string( builtin_proof_script( name ) );
    EXPECT_EQ( print_proof( parse_proof( text ) ), text ) << name;
    auto const file = std::string( BRIDGELAB_DATA_DIR ) + "/proofs/" + std::string( name ) + ".proof";
    EXPECT_EQ( slurp( file ), text ) << file;
  }
  EXPECT_THROW( builtin_proof( "nope" ), std::invalid_argument );
}

TEST( Proofs, BuiltinsAreSyntacticallyCorrect )
{
  for ( auto name : builtin_proof_names() )
  {
    auto const r = check_syntax( builtin_proof( name ) );
    for ( auto const& s : r.steps )
      EXPECT_TRUE( s.syntactic_ok ) << name << " " << s.id << ": " << s.message;
  }
}

TEST( Proofs, BridgeFutureClassical )
{
  auto const r = run( "bridge-future", { relation::cl } );
  EXPECT_TRUE( r.all_valid( relation::cl ) );
  EXPECT_EQ( render( r.steps.front().conclusion ), "Fut Pun(a) & ~Fut Pun(a)" );
  auto const p = builtin_proof( "bridge-future" );
  EXPECT_EQ( r.root_sequent.premises, p.premises );
}

TEST( Proofs, BridgeTreesUnderTTWithCooper )
{
  for ( auto name : { "bridge-future", "bridge-truth" } )
  {
    auto const r = run( name, { relation::tt } );
    EXPECT_TRUE( r.all_valid( relation::tt ) ) << name;
  }
  /* with the Kleene conditional, modus ponens breaks first at s6 */
  auto const r = run( "bridge-future", { relation::tt }, sk );
  EXPECT_EQ( r.first_failure( relation::tt ), "s6" );
}

TEST( Proofs, BuridanReductio )
{
  auto const p = builtin_proof( "buridan-reductio" );
  auto const ctx = p.ctx;
  EXPECT_EQ( p.root().conclusion, parse( "~phi", ctx ) );
  EXPECT_EQ( p.premises, ( std::vector<formula>{ parse( "Fut Pun(a) | ~Fut Pun(a)", ctx ), parse( "Says(a,b)", ctx ) } ) );
  auto const r = run( "buridan-reductio", { relation::cl } );
  EXPECT_TRUE( r.all_valid( relation::cl ) );
  EXPECT_TRUE( r.root_verdicts.at( relation::cl ).valid );
  EXPECT_TRUE( step_of( r, "r1" ).context.premises.size() == 2u );
}

TEST( Proofs, Church )
{
  auto const p = builtin_proof( "church" );
  EXPECT_EQ( p.root().conclusion, parse( "~S" ) );
  auto const r = run( "church", { relation::cl } );
  EXPECT_TRUE( r.all_valid( relation::cl ) );
  EXPECT_TRUE( r.root_verdicts.at( relation::cl ).valid );
  EXPECT_EQ( r.root_verdicts.at( relation::cl ).models_checked, 16u );
  EXPECT_TRUE( oracle::valid( p.premises, p.root().conclusion, "cl" ) );
}

TEST( Proofs, Jacquette )
{
  auto const p = builtin_proof( "jacquette" );
  EXPECT_EQ( p.root().r, rule::s_rule );
  EXPECT_EQ( p.root().conclusion, parse( "~Simp True(b) & ~Simp ~True(b)", p.ctx ) );
  EXPECT_EQ( p.steps[1].r, rule::bicond_i );
  EXPECT_TRUE( run( "jacquette", { relation::tt } ).all_valid( relation::tt ) );
  auto const kleene = run( "jacquette", { relation::tt }, sk );
  EXPECT_EQ( failing( kleene, relation::tt ), ( std::vector<std::string>{ "j6", "j15" } ) );
}

TEST( Proofs, LemReductioSplitsSSFromST )
{
  auto const r = run( "lem-reductio", { relation::ss, relation::st }, sk );
  EXPECT_EQ( failing( r, relation::ss ), std::vector<std::string>{ "r1" } );
  EXPECT_TRUE( failing( r, relation::st ).empty() );
  auto const& cm = step_of( r, "r1" ).per_relation.at( relation::ss ).countermodel;
  ASSERT_TRUE( cm );
  EXPECT_EQ( cm->atoms.at( "Fut Pun(a)" ), tv_half );
  EXPECT_EQ( cm->atoms.at( "True(b)" ), tv_half );
  /* the negated excluded middle is never strictly true there */
  EXPECT_NE( eval( step_of( r, "r1" ).conclusion, *cm, sk ), tv_one );
  /* the root verdict is decided on its own, not inferred from the steps */
  EXPECT_EQ( r.root_verdicts.at( relation::st ).valid, valid( r.root_sequent, relation::st, sk ).valid );
}

TEST( Proofs, ExFalsoFailsUnderTT )
{
  auto const r = run( "lem-reductio", { relation::tt }, sk );
  EXPECT_FALSE( step_of( r, "r2" ).per_relation.at( relation::tt ).valid );
}

TEST( Proofs, TransparencyRulesNeedTheConstraint )
{
  auto const with = run( "bridge-future", { relation::cl, relation::tt }, sk, true );
  auto const without = run( "bridge-future", { relation::cl, relation::tt }, sk, false );
  for ( auto id : { "s10", "s19" } )
  {
    for ( auto rel : { relation::cl, relation::tt } )
    {
      EXPECT_TRUE( step_of( with, id ).per_relation.at( rel ).valid ) << id;
      EXPECT_FALSE( step_of( without, id ).per_relation.at( rel ).valid ) << id;
    }
  }
}

TEST( Proofs, ProjectionSoundnessForTransitiveRelations )
{
  for ( auto name : builtin_proof_names() )
  {
    for ( auto fam : { sk, cooper } )
    {
      for ( bool transparent : { false, true } )
      {
        auto const r = run( name, { relation::cl, relation::ss, relation::tt }, fam, transparent );
        for ( auto rel : { relation::cl, relation::ss, relation::tt } )
        {
          if ( r.all_valid( rel ) )
            EXPECT_TRUE( r.root_verdicts.at( rel ).valid ) << name << " " << to_string( rel );
        }
      }
    }
  }
}

TEST( Proofs, MalformedCondE )
{
  auto const p = parse_proof( R"(proof bad
premise A & B
premise A
x1: CondE [x2, x3] B
  x2: Premise A & B
  x3: Premise A
)" );
  auto const r = check_syntax( p );
  EXPECT_FALSE( r.steps.front().syntactic_ok );
  EXPECT_NE( r.steps.front().message.find( "A -> B" ), std::string::npos );
  try
  {
    check_proof( p );
    FAIL();
  }
  catch ( proof_error const& e )
  {
    EXPECT_EQ( e.step(), "x1" );
  }
}

TEST( Proofs, BookkeepingErrors )
{
  /* discharging a label that is not open below */
  auto const a = parse_proof( "premise B\nx1: CondI [x2] {h} A -> B\n  x2: Premise B\n" );
  EXPECT_THROW( check_proof( a ), proof_error );
  /* open hypothesis at the root */
  auto const b = parse_proof( "x1: Hyp {h} A\n" );
  EXPECT_THROW( check_proof( b ), proof_error );
  /* undeclared premise */
  auto const c = parse_proof( "x1: Premise A\n" );
  EXPECT_THROW( check_proof( c ), proof_error );
  /* a correct discharge */
  auto const d = parse_proof( "x1: CondI [x2] {h} A -> A\n  x2: Hyp {h} A\n" );
  EXPECT_TRUE( check_proof( d ).all_valid( relation::cl ) );
  EXPECT_FALSE( check_proof( d, { { relation::ss } } ).all_valid( relation::ss ) );
}

TEST( Proofs, ScriptErrors )
{
  EXPECT_THROW( parse_proof( "x1: Magic A\n" ), parse_error );
  EXPECT_THROW( parse_proof( "x1 Premise A\n" ), parse_error );
  EXPECT_THROW( parse_proof( "proof empty\n" ), parse_error );
  EXPECT_THROW( parse_proof( "premise A\nx1: Premise A\nx1: Premise A\n" ), parse_error );
  EXPECT_THROW( parse_proof( "x1: AndE [x9] A\n" ), proof_error );
  EXPECT_THROW( parse_proof( "x1: Premise A &\n" ), parse_error );
}

TEST( Proofs, StepsAreReorderedToPreorder )
{
  auto const p = parse_proof( "premise A\npremise B\nx1: AndI [x3, x2] A & B\nx2: Premise B\nx3: Premise A\n" );
  EXPECT_EQ( p.root().id, "x1" );
  EXPECT_EQ( p.steps[1].id, "x3" );
  EXPECT_EQ( p.steps[2].id, "x2" );
  EXPECT_TRUE( check_proof( p ).all_valid( relation::cl ) );
}

TEST( Proofs, ReportJson )
{
  auto const j = to_json( run( "lem-reductio", { relation::ss, relation::st }, sk ) );
  EXPECT_EQ( j["firstFailure"]["ss"], "r1" );
  EXPECT_TRUE( j["firstFailure"]["st"].is_null() );
  EXPECT_EQ( j["steps"][0]["rule"], "Reductio" );
}
