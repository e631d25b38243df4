#include <bridgelab/consequence.hpp>
#include <bridgelab/json_io.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

using namespace bridgelab;

namespace
{
constexpr auto sk = connective_family::strong_kleene;
constexpr auto cooper = connective_family::cooper;

sequent seq( std::vector<std::string> const& premises, std::string const& conclusion, std::string const& ctx_text = "" )
{
  sequent s;
  s.ctx = parse_context( ctx_text );
  for ( auto const& p : premises )
    s.premises.push_back( parse( p, s.ctx ) );
  s.conclusion = parse( conclusion, s.ctx );
  return s;
}

sequent_file load( std::string const& file )
{
  std::ifstream in( std::string( BRIDGELAB_DATA_DIR ) + "/sequents/" + file );
  return sequent_from_json( json::parse( in ) );
}

/* refutation re-checked with the library evaluator and hand-coded designation */
bool countermodel_refutes( model const& m, sequent const& s, relation r, connective_family fam )
{
  int const pmin = ( r == relation::tt || r == relation::ts ) ? 1 : 2;
  int const cmin = ( r == relation::tt || r == relation::st ) ? 1 : 2;
  for ( auto const& p : s.premises )
    if ( eval( p, m, fam ).halves() < pmin )
      return false;
  if ( r == relation::cl && !m.is_classical() )
    return false;
  return eval( s.conclusion, m, fam ).halves() < cmin;
}

std::string rel_name( relation r ) { return std::string( to_string( r ) ); }
} // namespace

TEST( Consequence, EnumerationCounts )
{
  enumeration_options three, classical;
  classical.classical = true;
  EXPECT_EQ( enumerate_models( {}, { "A", "B" }, {}, three ).size(), 9u );
  EXPECT_EQ( enumerate_models( {}, { "A", "B" }, {}, classical ).size(), 4u );
  EXPECT_EQ( enumerate_models( {}, {}, {}, three ).size(), 1u );
}

TEST( Consequence, EnumerationOrderIsOdometer )
{
  auto const ms = enumerate_models( {}, { "A", "B" }, {}, enumeration_options{} );
  std::vector<std::pair<int, int>> got;
  for ( auto const& m : ms )
    got.emplace_back( m.atoms.at( "A" ).halves(), m.atoms.at( "B" ).halves() );
  std::vector<std::pair<int, int>> expected;
  for ( int a = 0; a < 3; ++a )
    for ( int b = 0; b < 3; ++b )
      expected.emplace_back( a, b );
  EXPECT_EQ( got, expected );
}

TEST( Consequence, EnumerationIsDuplicateFree )
{
  auto const ms = enumerate_models( {}, { "A", "B", "C" }, {}, enumeration_options{} );
  std::set<std::map<std::string, truth_value>> distinct;
  for ( auto const& m : ms )
    distinct.insert( m.atoms );
  EXPECT_EQ( distinct.size(), 27u );
}

TEST( Consequence, LiarEnumeration )
{
  auto const ctx = parse_context( "name l := ~True(l)\n" );
  enumeration_options classical;
  classical.classical = true;
  classical.transparent = true;
  EXPECT_TRUE( enumerate_models( { "l" }, { "True(l)" }, ctx, classical ).empty() );
  enumeration_options three;
  three.transparent = true;
  auto const ms = enumerate_models( { "l" }, { "True(l)", "Q" }, ctx, three );
  ASSERT_EQ( ms.size(), 3u );
  for ( auto const& m : ms )
    EXPECT_EQ( m.atoms.at( "True(l)" ), tv_half );
}

TEST( Consequence, ModusPonens )
{
  auto const mp = seq( { "A", "A -> B" }, "B" );
  auto const v = valid( mp, relation::tt, sk );
  ASSERT_FALSE( v.valid );
  ASSERT_TRUE( v.countermodel );
  EXPECT_EQ( v.countermodel->atoms.at( "A" ), tv_half );
  EXPECT_EQ( v.countermodel->atoms.at( "B" ), tv_zero );
  EXPECT_TRUE( valid( mp, relation::tt, cooper ).valid );
  EXPECT_EQ( valid( mp, relation::tt, cooper ).models_checked, 9u );
  EXPECT_TRUE( valid( mp, relation::cl ).valid );
}

TEST( Consequence, ExcludedMiddle )
{
  auto const lem = seq( {}, "A | ~A" );
  EXPECT_TRUE( valid( lem, relation::tt ).valid );
  EXPECT_TRUE( valid( lem, relation::st ).valid );
  EXPECT_TRUE( valid( lem, relation::cl ).valid );
  auto const ss = valid( lem, relation::ss );
  ASSERT_FALSE( ss.valid );
  EXPECT_EQ( ss.countermodel->atoms.at( "A" ), tv_half );
}

TEST( Consequence, ExplosionFailsInTT )
{
  auto const efq = seq( { "A", "~A" }, "B" );
  auto const v = valid( efq, relation::tt );
  ASSERT_FALSE( v.valid );
  EXPECT_EQ( v.countermodel->atoms.at( "A" ), tv_half );
  EXPECT_EQ( v.countermodel->atoms.at( "B" ), tv_zero );
  EXPECT_TRUE( valid( efq, relation::ss ).valid );
}

TEST( Consequence, AgreementExamples )
{
  for ( auto const& s : { seq( {}, "A | ~A" ), seq( { "A & ~A" }, "_|_" ) } )
  {
    EXPECT_TRUE( valid( s, relation::st ).valid );
    EXPECT_TRUE( valid( s, relation::cl ).valid );
  }
}

TEST( Consequence, CapExceeded )
{
  std::string big;
  for ( int i = 0; i < 17; ++i )
    big += ( i ? " & P" : "P" ) + std::to_string( i );
  auto const s = seq( {}, big );
  EXPECT_THROW( valid( s, relation::cl ), cap_exceeded );
  EXPECT_NO_THROW( valid( s, relation::cl, sk, 17 ) );
  EXPECT_THROW( valid( seq( {}, "A | B | C" ), relation::tt, sk, 2 ), cap_exceeded );
}

TEST( Consequence, CapFromEnvironment )
{
  ::unsetenv( "BRIDGELAB_CAP" );
  EXPECT_EQ( cap_from_environment(), default_atom_cap );
  ::setenv( "BRIDGELAB_CAP", "3", 1 );
  EXPECT_EQ( cap_from_environment(), 3u );
  ::unsetenv( "BRIDGELAB_CAP" );
}

TEST( Consequence, RelationNames )
{
  EXPECT_EQ( parse_relation( "ST" ), relation::st );
  EXPECT_EQ( parse_relation( "tt" ), relation::tt );
  EXPECT_FALSE( parse_relation( "lp" ) );
  EXPECT_EQ( default_family( relation::tt ), cooper );
  EXPECT_EQ( default_family( relation::ss ), sk );
}

TEST( Consequence, TransparencyDescent )
{
  auto f = load( "tr-descent.json" );
  for ( auto r : { relation::cl, relation::ss, relation::tt, relation::st } )
    EXPECT_TRUE( valid( f.seq, r ).valid ) << rel_name( r );
  /* TS is not even reflexive: Fut Pun(a) |- Fut Pun(a) fails at 1/2, and so does the descent */
  auto same = f.seq;
  same.premises = { same.conclusion };
  EXPECT_FALSE( valid( same, relation::ts ).valid );
  EXPECT_FALSE( valid( f.seq, relation::ts ).valid );
  f.seq.transparent = false;
  for ( auto r : all_relations )
  {
    auto const v = valid( f.seq, r );
    EXPECT_FALSE( v.valid ) << rel_name( r );
    if ( v.countermodel )
      EXPECT_TRUE( countermodel_refutes( *v.countermodel, f.seq, r, sk ) );
  }
}

TEST( Consequence, SequentFiles )
{
  auto const mp = load( "mp.json" );
  EXPECT_EQ( mp.rel, relation::tt );
  EXPECT_EQ( mp.family, sk );
  EXPECT_FALSE( valid( mp.seq, *mp.rel, *mp.family ).valid );
  auto const liar = load( "liar.json" );
  EXPECT_TRUE( valid( liar.seq, relation::tt ).valid );
  EXPECT_FALSE( valid( liar.seq, relation::ss ).valid );
  auto const church = load( "church.json" );
  auto const v = valid( church.seq, relation::cl );
  EXPECT_TRUE( v.valid );
  EXPECT_EQ( v.models_checked, 16u );
  EXPECT_THROW( valid( load( "wide.json" ).seq, relation::cl ), cap_exceeded );
}

TEST( Consequence, FixedAtomsAreNotEnumerated )
{
  auto s = seq( { "Says(a,b)" }, "Says(a,b) | Q" );
  s.sig.fixed["Says(a,b)"] = tv_one;
  EXPECT_EQ( free_atoms_of( s ), std::vector<std::string>{ "Q" } );
  EXPECT_EQ( valid( s, relation::tt ).models_checked, 3u );
}

TEST( Consequence, AgreesWithBruteForceOracle )
{
  oracle::generator gen( 99 );
  for ( int i = 0; i < 400; ++i )
  {
    sequent s;
    auto const n = gen.pick( 3 );
    for ( std::size_t k = 0; k < n; ++k )
      s.premises.push_back( gen.prop( 3 ) );
    s.conclusion = gen.prop( 3 );
    for ( auto r : all_relations )
    {
      for ( auto fam : { sk, cooper } )
      {
        auto const v = valid( s, r, fam );
        ASSERT_EQ( v.valid, oracle::valid( s.premises, s.conclusion, rel_name( r ), fam == cooper ) )
            << rel_name( r ) << " " << render( s );
        EXPECT_EQ( v.valid, !v.countermodel.has_value() );
        if ( v.countermodel )
        {
          EXPECT_TRUE( countermodel_refutes( *v.countermodel, s, r, fam ) ) << render( s );
          EXPECT_TRUE( refutes( *v.countermodel, s, r, fam ) );
        }
      }
    }
  }
}

TEST( Consequence, Reflexivity )
{
  oracle::generator gen( 3 );
  for ( int i = 0; i < 300; ++i )
  {
    sequent s;
    auto const a = gen.prop( 4, true );
    s.premises = { a };
    s.conclusion = a;
    for ( auto r : { relation::cl, relation::ss, relation::tt, relation::st } )
      EXPECT_TRUE( valid( s, r ).valid ) << rel_name( r ) << " " << render( a );
  }
}

TEST( Consequence, Containments )
{
  oracle::generator gen( 17 );
  for ( int i = 0; i < 600; ++i )
  {
    sequent s;
    auto const n = gen.pick( 3 );
    for ( std::size_t k = 0; k < n; ++k )
      s.premises.push_back( gen.prop( 3 ) );
    s.conclusion = gen.prop( 3 );
    auto const ss = valid( s, relation::ss ).valid;
    auto const st = valid( s, relation::st ).valid;
    auto const tt = valid( s, relation::tt ).valid;
    auto const ts = valid( s, relation::ts ).valid;
    auto const cl = valid( s, relation::cl ).valid;
    EXPECT_TRUE( !ss || st ) << render( s );
    EXPECT_TRUE( !ts || ( ss && tt ) ) << render( s );
    EXPECT_EQ( st, cl ) << render( s );
  }
}

TEST( Consequence, HypotheticalPremisesFilterModels )
{
  /* [A |- B], A |- B holds in every relation once the hypothetical is honoured */
  auto s = seq( { "A" }, "B" );
  s.hypotheticals.push_back( { { parse( "A" ) }, parse( "B" ) } );
  for ( auto r : all_relations )
    EXPECT_TRUE( valid( s, r ).valid ) << rel_name( r );
  EXPECT_EQ( render( s ), "[A |- B], A |- B" );
}

namespace
{
std::size_t oracle_pool_size( std::size_t atoms, std::size_t depth )
{
  std::size_t n = atoms + 1;
  for ( std::size_t d = 0; d < depth; ++d )
    n = atoms + 1 + n + 4 * n * n;
  return n;
}
} // namespace

TEST( Consequence, FormulaPoolSize )
{
  EXPECT_EQ( formula_pool( 2, 1 ).size(), oracle_pool_size( 2, 1 ) );
  EXPECT_EQ( formula_pool( 2, 2 ).size(), oracle_pool_size( 2, 2 ) );
  EXPECT_EQ( formula_pool( 1, 2 ).size(), oracle_pool_size( 1, 2 ) );
}

TEST( Consequence, ClassicalAgreementSmall )
{
  agreement_options opts;
  opts.depth = 1;
  auto const rep = classical_agreement( opts );
  EXPECT_TRUE( rep.clean() );
  EXPECT_EQ( rep.pool_size, oracle_pool_size( 2, 1 ) );
  /* cross-check every single-premise count against the oracle */
  auto const pool = formula_pool( 2, 1 );
  std::size_t st_valid = 0;
  for ( auto const& p : pool )
    for ( auto const& c : pool )
      st_valid += oracle::valid( { p }, c, "st" );
  std::size_t empty_valid = 0;
  for ( auto const& c : pool )
    empty_valid += oracle::valid( {}, c, "st" );
  std::size_t pair_valid = 0;
  for ( std::size_t i = 0; i < pool.size(); ++i )
    for ( std::size_t j = i + 1; j < pool.size(); ++j )
      for ( auto const& c : pool )
        pair_valid += oracle::valid( { pool[i], pool[j] }, c, "st" );
  EXPECT_EQ( rep.valid_counts.at( "st" ), st_valid + empty_valid + pair_valid );
  EXPECT_THROW( classical_agreement( agreement_options{ 4, 1 } ), std::invalid_argument );
}
