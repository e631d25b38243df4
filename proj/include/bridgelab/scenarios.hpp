/*!
  \file scenarios.hpp
  \brief The four readings of the Bridge: Buridan, Cervantes, Jacquette and the Liar variant
*/

#pragma once

#include <bridgelab/builtin_proofs.hpp>
#include <bridgelab/consequence.hpp>
#include <bridgelab/json_io.hpp>
#include <bridgelab/parser.hpp>
#include <bridgelab/semantics.hpp>
#include <bridgelab/temporal.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bridgelab
{

/*! \brief One recomputed claim of a scenario. */
struct finding
{
  std::string id;
  bool holds = false;
  std::string text;
};

struct scenario_report
{
  std::string name;
  json data;
  std::vector<finding> findings;

  bool ok() const
  {
    return std::all_of( findings.begin(), findings.end(), []( auto const& f ) { return f.holds; } );
  }

  finding const& at( std::string const& id ) const
  {
    for ( auto const& f : findings )
    {
      if ( f.id == id )
        return f;
    }
    throw std::out_of_range( "no finding '" + id + "' in scenario " + name );
  }

  json to_json() const
  {
    json j;
    j["scenario"] = name;
    j["data"] = data;
    json fs = json::array();
    for ( auto const& f : findings )
      fs.push_back( { { "id", f.id }, { "holds", f.holds }, { "text", f.text } } );
    j["findings"] = fs;
    j["ok"] = ok();
    return j;
  }

  std::string text() const
  {
    std::string out = "scenario " + name + "\n";
    for ( auto const& f : findings )
      out += std::string( f.holds ? "  [ok]   " : "  [FAIL] " ) + f.text + "\n";
    return out;
  }
};

inline constexpr std::array<std::string_view, 4> scenario_names{ "buridan", "cervantes", "jacquette", "liar-bridge" };

namespace scenario_detail
{

inline constexpr std::string_view decree_definitions = R"(define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
)";

inline quotation_context bridge_context()
{
  return parse_context( std::string( "domain a\nname b := Fut Pun(a)\n" ) + std::string( decree_definitions ) );
}

inline quotation_context liar_context()
{
  return parse_context( std::string( "domain a\nname l := ~True(l)\n" ) + std::string( decree_definitions ) );
}

/* Says(a,b) and the other facts that are not in question */
inline std::map<std::string, truth_value> bridge_background()
{
  return { { "Says(a,b)", tv_one },  { "Says(a,a)", tv_zero }, { "Says(b,a)", tv_zero },
           { "Says(b,b)", tv_zero }, { "True(a)", tv_zero },   { "Fut Pun(b)", tv_zero } };
}

inline std::vector<std::string> bridge_free_atoms() { return { "Fut Pun(a)", "True(b)" }; }

/*! \brief Buridan's two disjuncts of ~phi: a true speaker punished, or a false one spared. */
inline formula true_speaker_punished( quotation_context const& ctx )
{
  return parse( "exists x. exists y. Says(x,y) & True(y) & Fut Pun(x)", ctx );
}

inline formula false_speaker_spared( quotation_context const& ctx )
{
  return parse( "exists x. exists y. Says(x,y) & ~True(y) & ~Fut Pun(x)", ctx );
}

inline std::vector<model> buridan_completions()
{
  enumeration_options opts;
  opts.classical = true;
  opts.transparent = true;
  return enumerate_models( { "a", "b" }, bridge_free_atoms(), bridge_context(), opts, bridge_background() );
}

inline json atoms_json( model const& m, std::vector<std::string> const& keys )
{
  json j = json::object();
  for ( auto const& k : keys )
    j[k] = to_json( m.atoms.at( k ) );
  return j;
}

inline json relation_verdicts( proof_report const& r )
{
  json j = json::object();
  for ( auto const& [rel, v] : r.root_verdicts )
  {
    auto f = r.first_failure( rel );
    json failing = json::array();
    for ( auto const& s : r.steps )
    {
      if ( !s.per_relation.at( rel ).valid )
        failing.push_back( s.id );
    }
    j[std::string( to_string( rel ) )] = { { "allStepsValid", !f.has_value() },
                                           { "firstFailure", f ? json( *f ) : json( nullptr ) },
                                           { "failingSteps", failing },
                                           { "rootSequentValid", v.valid } };
  }
  return j;
}

inline std::string fmt( truth_value v ) { return v.to_string(); }

} // namespace scenario_detail

/*! \brief The ½ model: Fut Pun(a) and True(b) at 1/2, Says(a,b) true, the rest false. */
inline model half_model()
{
  model m;
  m.domain = { "a", "b" };
  m.ctx = scenario_detail::bridge_context();
  m.transparent = true;
  m.atoms = scenario_detail::bridge_background();
  m.atoms["Fut Pun(a)"] = tv_half;
  m.atoms["True(b)"] = tv_half;
  return m;
}

/*! \brief Two histories from t0: Socrates thrown in (h, at t1) or let through (h', at t2). */
inline branching_frame revenge_frame()
{
  branching_frame frame( { "t0", "t1", "t2" }, { { "t0", "t1" }, { "t0", "t2" } } );
  frame.domain = { "a" };
  frame.label_history( "h", "t1" );
  frame.label_history( "h'", "t2" );
  frame.set_value( "t0", "Pun(a)", false );
  frame.set_value( "h", "t1", "Pun(a)", true );
  frame.set_value( "h'", "t2", "Pun(a)", false );
  return frame;
}

inline scenario_report run_buridan()
{
  using namespace scenario_detail;
  scenario_report rep;
  rep.name = "buridan";
  auto const ctx = bridge_context();
  auto const phi = parse( "phi", ctx );
  auto const not_phi = ~phi;
  auto const d1 = true_speaker_punished( ctx );
  auto const d2 = false_speaker_spared( ctx );

  auto const models = buridan_completions();
  json completions = json::array();
  bool all_not_phi = true;
  bool each_witnessed = true;
  std::set<std::pair<truth_value, truth_value>> shapes;
  for ( auto const& m : models )
  {
    auto const np = eval( not_phi, m );
    all_not_phi = all_not_phi && np == tv_one;
    auto const w1 = eval( d1, m ) == tv_one;
    auto const w2 = eval( d2, m ) == tv_one;
    each_witnessed = each_witnessed && ( w1 || w2 );
    shapes.insert( { m.atoms.at( "Fut Pun(a)" ), m.atoms.at( "True(b)" ) } );
    json witnessed = json::array();
    if ( w1 )
      witnessed.push_back( render( d1 ) );
    if ( w2 )
      witnessed.push_back( render( d2 ) );
    completions.push_back( { { "atoms", atoms_json( m, bridge_free_atoms() ) },
                             { "phi", to_json( eval( phi, m ) ) },
                             { "notPhi", to_json( np ) },
                             { "witnessed", witnessed } } );
  }
  bool const exact_pair =
      models.size() == 2 && shapes == std::set<std::pair<truth_value, truth_value>>{ { tv_one, tv_one }, { tv_zero, tv_zero } };

  /* leave every background fact but Says(a,b) open */
  sequent wide;
  wide.premises = { parse( "Says(a,b)", ctx ) };
  wide.conclusion = not_phi;
  wide.ctx = ctx;
  wide.transparent = true;
  wide.sig.domain = { "a", "b" };
  wide.sig.fixed = { { "Says(a,b)", tv_one } };
  enumeration_options wide_opts;
  wide_opts.classical = true;
  wide_opts.transparent = true;
  std::size_t wide_not_phi = 0;
  auto const wide_total =
      for_each_model( wide.sig.domain, free_atoms_of( wide ), wide.sig.fixed, ctx, wide_opts, [&]( model const& m ) {
        wide_not_phi += eval( not_phi, m ) == tv_one;
        return true;
      } );

  proof_check_options popts;
  popts.relations = { relation::cl };
  auto const reductio = check_proof( builtin_proof( "buridan-reductio" ), popts );

  rep.data["background"] = json::object();
  for ( auto const& [k, v] : bridge_background() )
    rep.data["background"][k] = to_json( v );
  rep.data["completions"] = completions;
  rep.data["allModelsSatisfyNotPhi"] = all_not_phi;
  rep.data["wideBackground"] = { { "models", wide_total }, { "satisfyNotPhi", wide_not_phi } };
  rep.data["reductio"] = relation_verdicts( reductio );
  rep.data["reductioConclusion"] = render_folded( reductio.steps.front().conclusion, ctx );

  rep.findings.push_back( { "two-completions", exact_pair,
                            "exactly 2 classical transparent completions of Says(a,b)=1: Fut Pun(a)=True(b)=1 and "
                            "Fut Pun(a)=True(b)=0 (found " +
                                std::to_string( models.size() ) + ")" } );
  rep.findings.push_back( { "not-phi-everywhere", all_not_phi && !models.empty(),
                            "~phi holds in all " + std::to_string( models.size() ) +
                                " classical transparent completions" } );
  rep.findings.push_back( { "disjuncts-witnessed", each_witnessed,
                            "each completion witnesses a disjunct of ~phi: a true speaker punished or a false speaker "
                            "spared" } );
  rep.findings.push_back( { "wide-background", wide_total > 0 && wide_not_phi == wide_total,
                            "with only Says(a,b)=1 fixed, ~phi holds in all " + std::to_string( wide_total ) +
                                " classical transparent models" } );
  rep.findings.push_back( { "reductio-classical", reductio.all_valid( relation::cl ) &&
                                                      reductio.steps.front().conclusion == not_phi,
                            "buridan-reductio: every step CL-valid, concluding ~phi" } );
  return rep;
}

inline scenario_report run_cervantes()
{
  using namespace scenario_detail;
  scenario_report rep;
  rep.name = "cervantes";
  auto const m = half_model();
  auto const& ctx = m.ctx;
  auto const phi = parse( "phi", ctx );
  auto const tb = parse( "True(b)", ctx );

  auto const transparency = check_transparency( m, connective_family::cooper );
  auto const b_value = eval( ctx.referent( "b" ), m, connective_family::cooper );
  auto const tb_value = eval( tb, m, connective_family::cooper );
  auto const phi_cooper = eval( phi, m, connective_family::cooper );
  auto const phi_sk = eval( phi, m, connective_family::strong_kleene );

  auto const tree = builtin_proof( "bridge-future" );
  json steps = json::array();
  for ( auto const& s : tree.steps )
  {
    steps.push_back( { { "id", s.id },
                       { "conclusion", render_folded( s.conclusion, ctx ) },
                       { "cooper", to_json( eval( s.conclusion, m, connective_family::cooper ) ) },
                       { "strongKleene", to_json( eval( s.conclusion, m, connective_family::strong_kleene ) ) } } );
  }
  proof_check_options cooper_opts;
  cooper_opts.relations = { relation::tt };
  cooper_opts.family = connective_family::cooper;
  auto const tt_cooper = check_proof( tree, cooper_opts );
  auto sk_opts = cooper_opts;
  sk_opts.family = connective_family::strong_kleene;
  auto const tt_sk = check_proof( tree, sk_opts );

  /* against Buridan: same utterance, different status for the decree */
  auto const completions = buridan_completions();
  bool const buridan_phi_false = std::all_of( completions.begin(), completions.end(),
                                              [&]( model const& c ) { return eval( phi, c ) == tv_zero; } );
  bool const both_says = std::all_of( completions.begin(), completions.end(),
                                      [&]( model const& c ) { return c.atoms.at( "Says(a,b)" ) == tv_one; } ) &&
                         m.atoms.at( "Says(a,b)" ) == tv_one;

  /* the future settled: once Plato acts, b is classical along each history */
  auto const frame = revenge_frame();
  auto const lem = parse( "True(b) | ~True(b)", ctx );
  auto const fut = parse( "Fut Pun(a)", ctx );
  temporal_options root_opts;
  auto const fut_root = eval_at( fut, frame, "t0", ctx, root_opts );
  auto const lem_root = eval_at( lem, frame, "t0", ctx, root_opts );
  json per_history = json::object();
  bool histories_classical = true;
  for ( auto const& h : frame.histories() )
  {
    temporal_options o;
    o.history = h.label;
    auto const f = eval_at( fut, frame, "t0", ctx, o );
    auto const l = eval_at( lem, frame, "t0", ctx, o );
    histories_classical = histories_classical && f.is_classical() && l.is_classical();
    per_history[h.label] = { { "Fut Pun(a)", to_json( f ) }, { "True(b) | ~True(b)", to_json( l ) } };
  }

  rep.data["model"] = to_json( m );
  rep.data["family"] = "cooper";
  rep.data["values"] = { { "b", to_json( b_value ) },
                         { "True(b)", to_json( tb_value ) },
                         { "phi", to_json( phi_cooper ) },
                         { "phiStrongKleene", to_json( phi_sk ) } };
  rep.data["transparencyViolations"] = transparency.violations.size();
  rep.data["treeStepValues"] = steps;
  rep.data["treeTT"] = { { "cooper", relation_verdicts( tt_cooper )["tt"] },
                         { "strongKleene", relation_verdicts( tt_sk )["tt"] } };
  rep.data["againstBuridan"] = { { "buridanPhi", "0 in every classical completion" },
                                 { "cervantesPhi", to_json( phi_cooper ) },
                                 { "saysAbAgreed", both_says } };
  rep.data["future"] = { { "root", { { "Fut Pun(a)", to_json( fut_root ) }, { "True(b) | ~True(b)", to_json( lem_root ) } } },
                         { "histories", per_history } };

  rep.findings.push_back( { "transparent", transparency.ok(), "the 1/2 model satisfies transparency" } );
  rep.findings.push_back( { "b-half", b_value == tv_half && tb_value == tv_half,
                            "b = Fut Pun(a) and True(b) both take " + fmt( b_value ) } );
  rep.findings.push_back( { "phi-half", phi_cooper == tv_half, "the decree phi takes " + fmt( phi_cooper ) } );
  rep.findings.push_back( { "tree-tt-cooper", tt_cooper.all_valid( relation::tt ),
                            "every step of bridge-future is TT-valid with the Cooper conditional" } );
  rep.findings.push_back( { "tree-tt-kleene", !tt_sk.all_valid( relation::tt ),
                            "with the strong Kleene conditional bridge-future is not TT-valid (first failure " +
                                tt_sk.first_failure( relation::tt ).value_or( "none" ) + ")" } );
  rep.findings.push_back( { "diff-buridan", buridan_phi_false && phi_cooper == tv_half && both_says,
                            "against buridan: both take Says(a,b)=1; phi is 0 in every classical completion there "
                            "and 1/2 here" } );
  rep.findings.push_back( { "future-root", fut_root == tv_half && lem_root == tv_half,
                            "on the two-branch frame Fut Pun(a) = " + fmt( fut_root ) + " and True(b) | ~True(b) = " +
                                fmt( lem_root ) + " at t0" } );
  rep.findings.push_back( { "future-histories", histories_classical,
                            "within each single history both are classical" } );
  return rep;
}

inline scenario_report run_jacquette()
{
  using namespace scenario_detail;
  scenario_report rep;
  rep.name = "jacquette";
  auto const m = half_model();
  auto const& ctx = m.ctx;

  auto const jacquette = builtin_proof( "jacquette" );
  proof_check_options tt_opts;
  tt_opts.relations = { relation::tt };
  tt_opts.family = connective_family::strong_kleene;
  auto const tt_sk = check_proof( jacquette, tt_opts );
  tt_opts.family = connective_family::cooper;
  auto const tt_cooper = check_proof( jacquette, tt_opts );

  auto const simp_t = eval( parse( "Simp True(b)", ctx ), m );
  auto const simp_f = eval( parse( "Simp ~True(b)", ctx ), m );
  auto const s_conclusion = eval( jacquette.root().conclusion, m );

  auto const t_star = parse( "forall x. forall y. Says(x,y) -> (Simp True(y) -> ~Fut Pun(x))", ctx );
  auto const f_star = parse( "forall x. forall y. Says(x,y) -> (Simp ~True(y) -> Fut Pun(x))", ctx );
  auto const t_star_sk = eval( t_star, m, connective_family::strong_kleene );
  auto const f_star_sk = eval( f_star, m, connective_family::strong_kleene );

  sequent s_rule;
  s_rule.premises = { parse( "A <-> ~A" ) };
  s_rule.conclusion = parse( "~Simp A & ~Simp ~A" );
  auto const s_rule_sk = valid( s_rule, relation::tt, connective_family::strong_kleene );
  auto const s_rule_cooper = valid( s_rule, relation::tt, connective_family::cooper );

  auto const lem_reductio = builtin_proof( "lem-reductio" );
  proof_check_options split_opts;
  split_opts.relations = { relation::ss, relation::st };
  split_opts.family = connective_family::strong_kleene;
  auto const split = check_proof( lem_reductio, split_opts );
  auto const& discharge = split.steps.front();
  auto const ss_failures = relation_verdicts( split )["ss"]["failingSteps"];
  bool const only_discharge = ss_failures.size() == 1 && ss_failures[0] == discharge.id;
  auto const& counter = discharge.per_relation.at( relation::ss ).countermodel;

  sequent strict_premises = split.root_sequent;
  strict_premises.conclusion = formula::falsum();
  bool const premises_never_strict = valid( strict_premises, relation::ss ).valid;

  rep.data["jacquetteTT"] = { { "strongKleene", relation_verdicts( tt_sk )["tt"] },
                              { "cooper", relation_verdicts( tt_cooper )["tt"] } };
  rep.data["jacquetteConclusion"] = render( jacquette.root().conclusion );
  rep.data["halfModel"] = { { "Simp True(b)", to_json( simp_t ) },
                            { "Simp ~True(b)", to_json( simp_f ) },
                            { "conclusion", to_json( s_conclusion ) } };
  rep.data["starredDecree"] = {
      { "T*", render( t_star ) },
      { "F*", render( f_star ) },
      { "strongKleene", { { "T*", to_json( t_star_sk ) }, { "F*", to_json( f_star_sk ) } } },
      { "cooper",
        { { "T*", to_json( eval( t_star, m, connective_family::cooper ) ) },
          { "F*", to_json( eval( f_star, m, connective_family::cooper ) ) } } } };
  rep.data["sRule"] = { { "sequent", render( s_rule ) },
                        { "strongKleene", to_json( s_rule_sk ) },
                        { "cooper", to_json( s_rule_cooper ) } };
  rep.data["lemReductio"] = relation_verdicts( split );
  rep.data["lemReductioDischarge"] = { { "step", discharge.id },
                                       { "localSequent", render( discharge.local ) },
                                       { "ssCountermodel", counter ? to_json( *counter )["atoms"] : json( nullptr ) } };
  rep.data["lemReductioRoot"] = { { "sequent", render( split.root_sequent, &split.root_sequent.ctx ) },
                                  { "stValid", split.root_verdicts.at( relation::st ).valid },
                                  { "premisesNeverJointlyStrict", premises_never_strict } };

  rep.findings.push_back( { "jacquette-tt-cooper", tt_cooper.all_valid( relation::tt ),
                            "jacquette: every step TT-valid with the Cooper conditional" } );
  rep.findings.push_back( { "jacquette-tt-kleene", !tt_sk.all_valid( relation::tt ),
                            "jacquette: with the strong Kleene conditional modus ponens breaks TT-validity (first "
                            "failure " +
                                tt_sk.first_failure( relation::tt ).value_or( "none" ) + ")" } );
  rep.findings.push_back( { "simp-zero", simp_t == tv_zero && simp_f == tv_zero,
                            "in the 1/2 model Simp True(b) = " + fmt( simp_t ) + " and Simp ~True(b) = " +
                                fmt( simp_f ) } );
  rep.findings.push_back( { "starred-decree", t_star_sk == tv_one && f_star_sk == tv_one,
                            "with strong Kleene the starred decree holds in the 1/2 model: T* = " + fmt( t_star_sk ) +
                                ", F* = " + fmt( f_star_sk ) } );
  rep.findings.push_back( { "s-rule", s_rule_sk.valid && s_rule_cooper.valid,
                            "the S-rule A <-> ~A |- ~Simp A & ~Simp ~A is TT-valid" } );
  rep.findings.push_back( { "lem-reductio-ss", only_discharge && counter.has_value(),
                            "lem-reductio: every step SS-valid except the final discharge " + discharge.id } );
  rep.findings.push_back( { "lem-reductio-st", split.all_valid( relation::st ), "lem-reductio: every step ST-valid" } );
  return rep;
}

inline scenario_report run_liar_bridge()
{
  using namespace scenario_detail;
  scenario_report rep;
  rep.name = "liar-bridge";
  auto const ctx = liar_context();
  auto const phi = parse( "phi", ctx );
  std::set<std::string> const domain{ "a", "l" };
  std::map<std::string, truth_value> const background{ { "Says(a,l)", tv_one },  { "Says(a,a)", tv_zero },
                                                       { "Says(l,a)", tv_zero }, { "Says(l,l)", tv_zero },
                                                       { "True(a)", tv_zero } };
  std::vector<std::string> const free{ "Fut Pun(a)", "Fut Pun(l)", "True(l)" };

  enumeration_options classical;
  classical.classical = true;
  classical.transparent = true;
  std::size_t classical_with_phi = 0;
  auto const classical_all = for_each_model( domain, free, background, ctx, classical, [&]( model const& m ) {
    classical_with_phi += eval( phi, m ) == tv_one;
    return true;
  } );

  enumeration_options three = classical;
  three.classical = false;
  std::size_t three_all = 0, three_half = 0, three_phi_tolerant = 0;
  std::optional<model> half;
  for_each_model( domain, free, background, ctx, three, [&]( model const& m ) {
    ++three_all;
    if ( m.atoms.at( "True(l)" ) == tv_half )
    {
      ++three_half;
      if ( !half )
        half = m;
    }
    three_phi_tolerant += designated( eval( phi, m ), designation::tolerant );
    return true;
  } );
  auto const unsatisfiable = classically_unsatisfiable_names( ctx, domain );
  bool const liar_unsolvable = std::find( unsatisfiable.begin(), unsatisfiable.end(), "l" ) != unsatisfiable.end();

  sequent liar;
  liar.conclusion = parse( "True(l) <-> ~True(l)", ctx );
  liar.ctx = ctx;
  liar.transparent = true;
  json liar_verdicts = json::object();
  std::map<relation, verdict> vs;
  for ( auto r : all_relations )
  {
    vs[r] = valid( liar, r );
    liar_verdicts[std::string( to_string( r ) )] = to_json( vs[r] );
  }

  auto const simp_t = half ? eval( parse( "Simp True(l)", ctx ), *half ) : tv_one;
  auto const simp_f = half ? eval( parse( "Simp ~True(l)", ctx ), *half ) : tv_one;

  /* ST is not transitive: cut on True(l) */
  sequent left = liar;
  left.conclusion = parse( "True(l)", ctx );
  sequent right = liar;
  right.premises = { parse( "True(l)", ctx ) };
  right.conclusion = formula::falsum();
  sequent composed = liar;
  composed.conclusion = formula::falsum();
  auto const v_left = valid( left, relation::st );
  auto const v_right = valid( right, relation::st );
  auto const v_composed = valid( composed, relation::st );

  rep.data["names"] = names_to_json( ctx );
  rep.data["background"] = json::object();
  for ( auto const& [k, v] : background )
    rep.data["background"][k] = to_json( v );
  rep.data["classical"] = { { "transparentModels", classical_all }, { "withPhi", classical_with_phi } };
  rep.data["threeValued"] = { { "transparentModels", three_all },
                              { "trueLiarHalf", three_half },
                              { "phiTolerant", three_phi_tolerant } };
  rep.data["halfModel"] = half ? to_json( *half ) : json( nullptr );
  rep.data["simp"] = { { "Simp True(l)", to_json( simp_t ) }, { "Simp ~True(l)", to_json( simp_f ) } };
  rep.data["liarBiconditional"] = { { "sequent", render( liar ) }, { "verdicts", liar_verdicts } };
  rep.data["stCut"] = { { "left", { { "sequent", render( left ) }, { "verdict", to_json( v_left ) } } },
                        { "right", { { "sequent", render( right ) }, { "verdict", to_json( v_right ) } } },
                        { "composed", { { "sequent", render( composed ) }, { "verdict", to_json( v_composed ) } } } };

  rep.findings.push_back( { "no-classical", classical_all == 0 && classical_with_phi == 0 && liar_unsolvable,
                            "no classical transparent model, with or without the decree" } );
  rep.findings.push_back( { "half-only", three_all > 0 && three_half == three_all,
                            "1/2 model admitted: all " + std::to_string( three_all ) +
                                " three-valued transparent models give True(l) = 0.5" } );
  rep.findings.push_back( { "liar-tt", vs[relation::tt].valid, "|- True(l) <-> ~True(l) is TT-valid" } );
  rep.findings.push_back( { "liar-ss", !vs[relation::ss].valid && !vs[relation::ts].valid,
                            "|- True(l) <-> ~True(l) is not SS-valid (nor TS-valid)" } );
  rep.findings.push_back( { "liar-st", vs[relation::st].valid, "|- True(l) <-> ~True(l) is ST-valid" } );
  rep.findings.push_back( { "liar-cl", vs[relation::cl].valid && vs[relation::cl].models_checked == 0,
                            "|- True(l) <-> ~True(l) is CL-valid only vacuously (0 classical models)" } );
  rep.findings.push_back( { "simp-zero", half && simp_t == tv_zero && simp_f == tv_zero,
                            "neither true simpliciter nor false simpliciter: Simp True(l) = " + fmt( simp_t ) +
                                ", Simp ~True(l) = " + fmt( simp_f ) } );
  rep.findings.push_back( { "st-cut", v_left.valid && v_right.valid && !v_composed.valid,
                            "ST cut fails: |- True(l) and True(l) |- _|_ hold, |- _|_ does not" } );
  return rep;
}

/*! \brief Run a scenario by name; throws `std::invalid_argument` for unknown names. */
inline scenario_report run_scenario( std::string_view name )
{
  if ( name == "buridan" )
    return run_buridan();
  if ( name == "cervantes" )
    return run_cervantes();
  if ( name == "jacquette" )
    return run_jacquette();
  if ( name == "liar-bridge" )
    return run_liar_bridge();
  throw std::invalid_argument( "unknown scenario '" + std::string( name ) + "'" );
}

} // namespace bridgelab
