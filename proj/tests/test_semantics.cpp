#include <bridgelab/json_io.hpp>
#include <bridgelab/semantics.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace bridgelab;

namespace
{
constexpr auto sk = connective_family::strong_kleene;
constexpr auto cooper = connective_family::cooper;
constexpr truth_value all_values[] = { tv_zero, tv_half, tv_one };

model load_model( std::string const& file )
{
  std::ifstream in( std::string( BRIDGELAB_DATA_DIR ) + "/models/" + file );
  return model_from_json( json::parse( in ) );
}

model prop_model( std::map<std::string, truth_value> atoms )
{
  model m;
  m.atoms = std::move( atoms );
  return m;
}

oracle::valuation to_oracle( model const& m )
{
  oracle::valuation v;
  for ( auto const& [k, val] : m.atoms )
    v[k] = val.halves();
  return v;
}
} // namespace

TEST( Semantics, CooperConditionalExamples )
{
  auto const f = parse( "A -> B" );
  EXPECT_EQ( eval( f, prop_model( { { "A", tv_half }, { "B", tv_zero } } ), cooper ), tv_zero );
  EXPECT_EQ( eval( f, prop_model( { { "A", tv_zero }, { "B", tv_one } } ), cooper ), tv_half );
}

TEST( Semantics, ExcludedMiddleAtHalf )
{
  EXPECT_EQ( eval( parse( "A | ~A" ), prop_model( { { "A", tv_half } } ) ), tv_half );
}

TEST( Semantics, CervantesModel )
{
  auto const m = load_model( "cervantes.model.json" );
  EXPECT_TRUE( m.transparent );
  EXPECT_EQ( eval( parse( "phi", m.ctx ), m, cooper ), tv_half );
  EXPECT_EQ( eval( parse( "True(b)", m.ctx ), m, cooper ), tv_half );
  EXPECT_EQ( eval( parse( "Simp True(b)", m.ctx ), m, cooper ), tv_zero );
  EXPECT_EQ( eval( parse( "Simp ~True(b)", m.ctx ), m, cooper ), tv_zero );
  EXPECT_TRUE( check_transparency( m, cooper ).ok() );
}

TEST( Semantics, TransparencyViolation )
{
  model m;
  m.ctx = parse_context( "name b := Fut Pun(a)\n" );
  m.domain = { "a", "b" };
  m.atoms = { { "True(b)", tv_one }, { "Fut Pun(a)", tv_zero } };
  auto const r = check_transparency( m );
  ASSERT_EQ( r.violations.size(), 1u );
  EXPECT_EQ( r.violations[0].name, "b" );
  EXPECT_EQ( r.violations[0].truth_value_of_name, tv_one );
  EXPECT_EQ( r.violations[0].referent_value, tv_zero );
}

TEST( Semantics, LiarHasOnlyTheHalfSolution )
{
  auto const ctx = parse_context( "name l := ~True(l)\n" );
  /* solve v = 1 - v by hand over the three values */
  std::vector<truth_value> solutions;
  for ( int h = 0; h < 3; ++h )
  {
    if ( h == 2 - h )
      solutions.push_back( truth_value::from_halves( static_cast<std::uint8_t>( h ) ) );
  }
  for ( auto val : all_values )
  {
    model m{ { "l" }, { { "True(l)", val } }, ctx, true };
    bool const transparent = check_transparency( m ).ok();
    EXPECT_EQ( transparent, std::find( solutions.begin(), solutions.end(), val ) != solutions.end() );
  }
  model m{ { "l" }, { { "True(l)", tv_half } }, ctx, true };
  auto const r = check_transparency( m, sk, true );
  EXPECT_TRUE( r.ok() );
  EXPECT_EQ( r.no_classical_solution, std::vector<std::string>{ "l" } );
  EXPECT_EQ( classically_unsatisfiable_names( ctx, {} ), std::vector<std::string>{ "l" } );
  EXPECT_TRUE( classically_unsatisfiable_names( parse_context( "name b := Fut Pun(a)\n" ), { "a" } ).empty() );
}

TEST( Semantics, TransparentTruthFallsThroughToReferent )
{
  model m;
  m.ctx = parse_context( "name b := Fut Pun(a)\n" );
  m.domain = { "a", "b" };
  m.transparent = true;
  m.atoms = { { "Fut Pun(a)", tv_one } };
  EXPECT_EQ( eval( parse( "True(b)", m.ctx ), m ), tv_one );
}

TEST( Semantics, QuantifiersAreMinAndMax )
{
  model m;
  m.domain = { "a", "b" };
  m.atoms = { { "Pun(a)", tv_one }, { "Pun(b)", tv_half } };
  EXPECT_EQ( eval( parse( "forall x. Pun(x)" ), m ), tv_half );
  EXPECT_EQ( eval( parse( "exists x. Pun(x)" ), m ), tv_one );
  EXPECT_EQ( eval( parse( "forall x. exists y. Pun(y) & ~Pun(x)" ), m ), tv_zero );
}

TEST( Semantics, Errors )
{
  model m;
  m.domain = { "a" };
  m.atoms = { { "Pun(a)", tv_one } };
  EXPECT_THROW( eval( parse( "Pun(c)" ), m ), semantic_error );
  EXPECT_THROW( eval( parse( "Fut Pun(a)" ), m ), semantic_error );
  EXPECT_THROW( eval( parse( "Fut (Pun(a) & Pun(a))" ), m ), semantic_error );
  EXPECT_THROW( eval( formula::true_pred( term::constant( "b" ) ), m ), semantic_error );
  EXPECT_EQ( eval( formula::falsum(), m ), tv_zero );
}

TEST( Semantics, SimpIgnoresFamily )
{
  auto const f = parse( "Simp (A -> B)" );
  auto const m = prop_model( { { "A", tv_zero }, { "B", tv_zero } } );
  EXPECT_EQ( eval( f, m, sk ), tv_one );
  EXPECT_EQ( eval( f, m, cooper ), tv_zero );
}

TEST( Semantics, DeMorganExhaustive )
{
  auto const lhs = parse( "~(A & B)" ), rhs = parse( "~A | ~B" );
  for ( auto a : all_values )
    for ( auto b : all_values )
    {
      auto const m = prop_model( { { "A", a }, { "B", b } } );
      EXPECT_EQ( eval( lhs, m ), eval( rhs, m ) );
    }
}

TEST( Semantics, AgreesWithIndependentEvaluator )
{
  oracle::generator gen( 11 );
  for ( int i = 0; i < 400; ++i )
  {
    auto const f = gen.prop( 5, true );
    for ( auto a : all_values )
      for ( auto b : all_values )
        for ( auto c : all_values )
        {
          auto const m = prop_model( { { "A", a }, { "B", b }, { "C", c } } );
          auto const v = to_oracle( m );
          ASSERT_EQ( eval( f, m, sk ).halves(), oracle::eval( f, v, false ) ) << render( f );
          ASSERT_EQ( eval( f, m, cooper ).halves(), oracle::eval( f, v, true ) ) << render( f );
        }
  }
}

TEST( Semantics, KleeneMonotonicity )
{
  /* refining 1/2 atoms to classical values never disturbs a classical compound value */
  oracle::generator gen( 5 );
  std::vector<std::string> const names{ "A", "B", "C" };
  auto refines = []( truth_value coarse, truth_value fine ) { return coarse == tv_half || coarse == fine; };
  for ( int i = 0; i < 150; ++i )
  {
    auto const f = gen.prop( 4 );
    for ( int coarse = 0; coarse < 27; ++coarse )
      for ( int fine = 0; fine < 27; ++fine )
      {
        model mc, mf;
        bool ok = true;
        for ( int k = 0, cc = coarse, ff = fine; k < 3; ++k, cc /= 3, ff /= 3 )
        {
          mc.atoms[names[k]] = all_values[cc % 3];
          mf.atoms[names[k]] = all_values[ff % 3];
          ok = ok && refines( all_values[cc % 3], all_values[ff % 3] );
        }
        if ( !ok )
          continue;
        auto const vc = eval( f, mc );
        if ( vc.is_classical() )
          ASSERT_EQ( eval( f, mf ), vc ) << render( f );
      }
  }
}

TEST( Semantics, TraceListsSubformulasInPreorder )
{
  std::vector<trace_entry> trace;
  auto const v = eval_traced( parse( "A & ~B" ), prop_model( { { "A", tv_one }, { "B", tv_half } } ), sk, trace );
  EXPECT_EQ( v, tv_half );
  ASSERT_EQ( trace.size(), 4u );
}

TEST( Semantics, GroundAtomsFollowTransparency )
{
  auto const ctx = parse_context( "name b := Fut Pun(a)\n" );
  auto const f = parse( "Says(a,b) & True(b)", ctx );
  EXPECT_EQ( ground_atoms( f, { "a", "b" }, ctx, false ), ( std::set<std::string>{ "Says(a,b)", "True(b)" } ) );
  EXPECT_EQ( ground_atoms( f, { "a", "b" }, ctx, true ),
             ( std::set<std::string>{ "Fut Pun(a)", "Says(a,b)", "True(b)" } ) );
}
