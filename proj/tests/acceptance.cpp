/* Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure. */

#include <bridgelab.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace bridgelab;

namespace
{
constexpr auto sk = connective_family::strong_kleene;
constexpr auto cooper = connective_family::cooper;

sequent make( std::vector<std::string> const& premises, std::string const& conclusion, quotation_context ctx = {},
              bool transparent = false )
{
  sequent s;
  s.ctx = std::move( ctx );
  s.transparent = transparent;
  for ( auto const& p : premises )
    s.premises.push_back( parse( p, s.ctx ) );
  s.conclusion = parse( conclusion, s.ctx );
  return s;
}

proof_report check( std::string_view name, std::vector<relation> rels, std::optional<connective_family> fam = {} )
{
  proof_check_options opts;
  opts.relations = std::move( rels );
  opts.family = fam;
  return check_proof( builtin_proof( name ), opts );
}

bool buridan()
{
  auto const ctx = scenario_detail::bridge_context();
  enumeration_options opts;
  opts.classical = true;
  opts.transparent = true;
  auto const models = enumerate_models( { "a", "b" }, { "Fut Pun(a)", "True(b)" }, ctx, opts,
                                        scenario_detail::bridge_background() );
  if ( models.size() != 2u )
    return false;
  auto const not_phi = parse( "~phi", ctx );
  std::set<std::pair<truth_value, truth_value>> seen;
  for ( auto const& m : models )
  {
    if ( eval( not_phi, m ) != tv_one )
      return false;
    seen.emplace( m.atoms.at( "Fut Pun(a)" ), m.atoms.at( "True(b)" ) );
  }
  if ( seen != std::set<std::pair<truth_value, truth_value>>{ { tv_zero, tv_zero }, { tv_one, tv_one } } )
    return false;
  return check( "buridan-reductio", { relation::cl } ).all_valid( relation::cl );
}

bool church()
{
  auto const s = make( { "R <-> (P & Q)", "P", "S -> (Q <-> (P & ~R))" }, "~S" );
  auto const v = valid( s, relation::cl );
  return v.valid && v.models_checked == 16u;
}

bool cervantes()
{
  auto const m = half_model();
  if ( !m.transparent || !check_transparency( m, cooper ).ok() )
    return false;
  if ( eval( parse( "True(b)", m.ctx ), m, cooper ) != tv_half || eval( parse( "phi", m.ctx ), m, cooper ) != tv_half )
    return false;
  return check( "bridge-future", { relation::tt }, cooper ).all_valid( relation::tt );
}

bool modus_ponens()
{
  auto const mp = make( { "A", "A -> B" }, "B" );
  auto const kleene = valid( mp, relation::tt, sk );
  auto const coop = valid( mp, relation::tt, cooper );
  return !kleene.valid && kleene.countermodel && kleene.countermodel->atoms.at( "A" ) == tv_half &&
         kleene.countermodel->atoms.at( "B" ) == tv_zero && coop.valid && coop.models_checked == 9u;
}

bool s_rule()
{
  auto const v = valid( make( { "A <-> ~A" }, "~Simp A & ~Simp ~A" ), relation::tt, sk );
  auto const m = half_model();
  return v.valid && eval( parse( "Simp True(b)", m.ctx ), m, cooper ) == tv_zero &&
         eval( parse( "Simp ~True(b)", m.ctx ), m, cooper ) == tv_zero;
}

bool lem_split()
{
  auto const r = check( "lem-reductio", { relation::ss, relation::st }, sk );
  std::vector<std::string> ss_failures;
  for ( auto const& s : r.steps )
    if ( !s.per_relation.at( relation::ss ).valid )
      ss_failures.push_back( s.id );
  if ( ss_failures != std::vector<std::string>{ r.steps.front().id } || r.steps.front().r != rule::reductio )
    return false;
  auto const& cm = r.steps.front().per_relation.at( relation::ss ).countermodel;
  return cm && refutes( *cm, r.steps.front().local, relation::ss, sk ) && r.all_valid( relation::st );
}

bool future()
{
  auto const frame = revenge_frame();
  auto const pa = parse( "Pun(a)" );
  auto const lem = parse( "Fut Pun(a) | ~Fut Pun(a)" );
  if ( eval_fut( pa, frame, "t0" ) != tv_half || eval_at( lem, frame, "t0" ) != tv_half )
    return false;
  for ( auto const& h : frame.histories( "t0" ) )
  {
    temporal_options opts;
    opts.history = h.label;
    if ( !eval_fut( pa, frame, "t0", opts ).is_classical() || eval_at( lem, frame, "t0", {}, opts ) != tv_one )
      return false;
  }
  return true;
}

bool liar()
{
  auto const ctx = parse_context( "name l := ~True(l)\n" );
  enumeration_options classical;
  classical.classical = true;
  classical.transparent = true;
  if ( !enumerate_models( { "l" }, { "True(l)" }, ctx, classical ).empty() )
    return false;
  enumeration_options three;
  three.transparent = true;
  auto const ms = enumerate_models( { "l" }, { "True(l)" }, ctx, three );
  if ( ms.size() != 1u || ms.front().atoms.at( "True(l)" ) != tv_half )
    return false;
  return valid( make( {}, "True(l) <-> ~True(l)", ctx, true ), relation::tt, sk ).valid;
}

bool containments()
{
  auto const r = classical_agreement();
  return r.clean() && r.atoms == 2u && r.depth == 2u && r.sequents_checked > 0u;
}

bool determinism()
{
  for ( auto name : scenario_names )
  {
    if ( run_scenario( name ).to_json().dump( 2 ) != run_scenario( name ).to_json().dump( 2 ) )
      return false;
  }
  return true;
}

struct criterion
{
  char const* text;
  std::function<bool()> run;
};
} // namespace

int main()
{
  criterion const criteria[] = {
      { "Buridan: two classical transparent completions, ~phi in both, reductio CL-valid", buridan },
      { "Church: ~S follows classically over 16 valuations", church },
      { "Cervantes: b = 1/2, phi = 1/2, bridge-future TT-valid with Cooper", cervantes },
      { "modus ponens: TT/strong Kleene fails at (1/2, 0), TT/Cooper holds", modus_ponens },
      { "S-rule TT-valid; Simp True(b) = Simp ~True(b) = 0 in the 1/2 model", s_rule },
      { "lem-reductio: SS fails only at the final discharge, every step ST-valid", lem_split },
      { "future: Fut Pun(a) and its excluded middle 1/2 at the root, classical per history", future },
      { "Liar: no classical transparent model, only True(l) = 1/2, |- T(l) <-> ~T(l) TT-valid", liar },
      { "containments SS<=ST, TS<=SS&TT, ST=CL on the depth-2 two-atom pool", containments },
      { "determinism: every scenario JSON byte-identical across runs", determinism },
  };
  int failures = 0;
  int n = 0;
  for ( auto const& c : criteria )
  {
    ++n;
    auto const start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try
    {
      ok = c.run();
    }
    catch ( std::exception const& e )
    {
      error = e.what();
    }
    auto const ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
    std::printf( "%s criterion %d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", n, c.text, ms, error.empty() ? "" : " error: ",
                 error.c_str() );
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
