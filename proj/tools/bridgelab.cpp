// bridgelab: evaluate formulas, decide sequents, check proofs and run the Bridge scenarios.
//
// Exit codes: 0 ok/valid, 1 invalid, 2 parse error, 3 semantic error, 4 enumeration cap exceeded.

#include <bridgelab.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bridgelab;

namespace
{

enum exit_code : int
{
  exit_ok = 0,
  exit_invalid = 1,
  exit_parse = 2,
  exit_semantic = 3,
  exit_cap = 4
};

struct input_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw input_error( "cannot read '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json( std::string const& path ) { return json::parse( read_file( path ) ); }

connective_family family_or( std::string const& text, connective_family fallback )
{
  if ( text.empty() )
    return fallback;
  auto f = parse_family( text );
  if ( !f )
    throw input_error( "unknown connective family '" + text + "'" );
  return *f;
}

std::vector<relation> relations_of( std::string const& text )
{
  std::vector<relation> out;
  std::string item;
  std::istringstream in( text );
  while ( std::getline( in, item, ',' ) )
  {
    auto r = parse_relation( item );
    if ( !r )
      throw input_error( "unknown relation '" + item + "'" );
    out.push_back( *r );
  }
  if ( out.empty() )
    throw input_error( "no relation given" );
  return out;
}

std::size_t cap_of( std::optional<std::size_t> const& flag ) { return flag ? *flag : cap_from_environment(); }

std::string atoms_text( std::map<std::string, truth_value> const& atoms )
{
  std::string out;
  for ( auto const& [k, v] : atoms )
    out += ( out.empty() ? "" : ", " ) + k + "=" + v.to_string();
  return out;
}

void print( json const& j ) { std::cout << j.dump( 2 ) << "\n"; }

/* -------------------------------------------------------------------------- */

struct eval_args
{
  std::string formula_text;
  std::string model_path;
  std::string frame_path;
  std::string moment = "t0";
  std::string history;
  std::string family;
  bool trace = false;
  bool as_json = false;
};

int cmd_eval( eval_args const& a )
{
  auto const family = family_or( a.family, connective_family::strong_kleene );
  if ( !a.frame_path.empty() )
  {
    auto const j = read_json( a.frame_path );
    auto const frame = frame_from_json( j );
    auto const ctx = context_from_json( j );
    auto const f = parse( a.formula_text, ctx );
    temporal_options opts;
    opts.family = family;
    if ( !a.history.empty() )
      opts.history = a.history;
    auto const v = eval_at( f, frame, a.moment, ctx, opts );
    if ( a.as_json )
      print( { { "formula", render( f ) }, { "moment", a.moment }, { "value", to_json( v ) } } );
    else
      std::cout << v.to_string() << "\n";
    return exit_ok;
  }

  model m;
  if ( !a.model_path.empty() )
    m = model_from_json( read_json( a.model_path ) );
  auto const f = parse( a.formula_text, m.ctx );
  std::vector<trace_entry> trace;
  auto const v = a.trace ? eval_traced( f, m, family, trace ) : eval( f, m, family );
  if ( a.as_json )
  {
    json j{ { "formula", render( f ) }, { "family", std::string( to_string( family ) ) }, { "value", to_json( v ) } };
    if ( a.trace )
    {
      json rows = json::array();
      for ( auto const& t : trace )
        rows.push_back( { { "depth", t.depth }, { "formula", t.text }, { "value", to_json( t.value ) } } );
      j["trace"] = rows;
    }
    print( j );
    return exit_ok;
  }
  std::cout << v.to_string() << "\n";
  for ( auto const& t : trace )
    std::cout << std::left << std::setw( 5 ) << t.value.to_string() << std::string( 2 * t.depth, ' ' ) << t.text << "\n";
  return exit_ok;
}

/* -------------------------------------------------------------------------- */

struct check_args
{
  std::string path;
  std::string relation_text;
  std::string family;
  bool transparent = false;
  std::optional<std::size_t> cap;
  bool as_json = false;
};

int cmd_check( check_args const& a )
{
  auto file = sequent_from_json( read_json( a.path ) );
  auto const r = a.relation_text.empty() ? file.rel.value_or( relation::cl ) : relations_of( a.relation_text ).front();
  auto const family = family_or( a.family, file.family.value_or( connective_family::strong_kleene ) );
  if ( a.transparent )
    file.seq.transparent = true;
  auto const v = valid( file.seq, r, family, cap_of( a.cap ) );
  if ( a.as_json )
  {
    auto j = to_json( v );
    j["sequent"] = render( file.seq, &file.seq.ctx );
    j["relation"] = std::string( to_string( r ) );
    j["family"] = std::string( to_string( family ) );
    j["transparent"] = file.seq.transparent;
    print( j );
  }
  else
  {
    std::cout << render( file.seq, &file.seq.ctx ) << "  [" << to_string( r ) << ", " << to_string( family )
              << ( file.seq.transparent ? ", transparent" : "" ) << "]\n";
    std::cout << ( v.valid ? "valid" : "invalid" ) << " (" << v.models_checked << " models checked)\n";
    if ( v.countermodel )
      std::cout << "countermodel: " << atoms_text( v.countermodel->atoms ) << "\n";
  }
  return v.valid ? exit_ok : exit_invalid;
}

/* -------------------------------------------------------------------------- */

struct proof_args
{
  std::string source;
  std::string relation_text = "cl";
  std::string family;
  bool transparent = false;
  std::optional<std::size_t> cap;
  bool as_json = false;
  bool print_script = false;
};

proof load_proof( std::string const& source )
{
  static constexpr std::string_view prefix = "builtin:";
  if ( source.rfind( prefix, 0 ) == 0 )
  {
    try
    {
      return builtin_proof( std::string_view( source ).substr( prefix.size() ) );
    }
    catch ( std::invalid_argument const& e )
    {
      throw input_error( e.what() );
    }
  }
  return parse_proof( read_file( source ) );
}

int cmd_proof( proof_args const& a )
{
  auto const p = load_proof( a.source );
  if ( a.print_script )
  {
    std::cout << print_proof( p );
    return exit_ok;
  }
  proof_check_options opts;
  opts.relations = relations_of( a.relation_text );
  if ( !a.family.empty() )
    opts.family = family_or( a.family, connective_family::strong_kleene );
  if ( a.transparent )
    opts.transparent = true;
  opts.cap = cap_of( a.cap );
  auto const report = check_proof( p, opts );
  auto const primary = opts.relations.front();

  if ( a.as_json )
  {
    auto j = to_json( report );
    json families = json::object();
    for ( auto r : opts.relations )
      families[std::string( to_string( r ) )] = std::string( to_string( opts.family.value_or( default_family( r ) ) ) );
    j["families"] = families;
    print( j );
  }
  else
  {
    std::size_t width = 6;
    for ( auto const& s : report.steps )
      width = std::max( width, 2 * s.depth + s.id.size() + to_string( s.r ).size() + 3 );
    std::cout << "proof " << report.name << "\n";
    std::cout << std::left << std::setw( static_cast<int>( width ) ) << "step";
    for ( auto r : opts.relations )
      std::cout << std::setw( 10 ) << to_string( r );
    std::cout << "local sequent\n";
    for ( auto const& s : report.steps )
    {
      std::string const head = std::string( 2 * s.depth, ' ' ) + s.id + " " + std::string( to_string( s.r ) );
      std::cout << std::setw( static_cast<int>( width ) ) << head;
      for ( auto r : opts.relations )
        std::cout << std::setw( 10 ) << ( s.per_relation.at( r ).valid ? "valid" : "INVALID" );
      std::cout << render( s.local, &p.ctx ) << "\n";
    }
    for ( auto r : opts.relations )
    {
      auto const f = report.first_failure( r );
      std::cout << to_string( r ) << " (" << to_string( opts.family.value_or( default_family( r ) ) )
                << "): " << ( f ? "first failure at " + *f : std::string( "every step valid" ) );
      if ( f )
      {
        auto const& cm = report.steps[p.index_of( *f )].per_relation.at( r ).countermodel;
        if ( cm )
          std::cout << "; countermodel " << atoms_text( cm->atoms );
      }
      std::cout << "; root sequent " << ( report.root_verdicts.at( r ).valid ? "valid" : "invalid" ) << "\n";
    }
    std::cout << "concludes " << render_folded( p.root().conclusion, p.ctx ) << "\n";
  }
  return report.all_valid( primary ) ? exit_ok : exit_invalid;
}

/* -------------------------------------------------------------------------- */

struct scenario_args
{
  std::string name;
  bool as_json = false;
  bool check_golden = false;
  std::string golden_dir = "data/golden";
};

int cmd_scenario( scenario_args const& a )
{
  scenario_report report;
  try
  {
    report = run_scenario( a.name );
  }
  catch ( std::invalid_argument const& e )
  {
    throw input_error( e.what() );
  }
  auto const text = report.to_json().dump( 2 ) + "\n";
  std::cout << ( a.as_json ? text : report.text() );
  if ( a.check_golden )
  {
    auto const path = a.golden_dir + "/" + a.name + ".json";
    if ( read_file( path ) != text )
    {
      std::cerr << "golden mismatch: " << path << "\n";
      return exit_invalid;
    }
    std::cerr << "golden match: " << path << "\n";
  }
  return report.ok() ? exit_ok : exit_invalid;
}

/* -------------------------------------------------------------------------- */

struct agreement_args
{
  std::size_t atoms = 2;
  std::size_t depth = 2;
  std::optional<std::size_t> cap;
  bool as_json = false;
};

int cmd_agreement( agreement_args const& a )
{
  agreement_options opts;
  opts.atoms = a.atoms;
  opts.depth = a.depth;
  opts.cap = cap_of( a.cap );
  agreement_report report;
  try
  {
    report = classical_agreement( opts );
  }
  catch ( std::invalid_argument const& e )
  {
    throw input_error( e.what() );
  }
  if ( a.as_json )
    print( to_json( report ) );
  else
  {
    std::cout << "pool: " << report.pool_size << " formulas (" << report.atoms << " atoms, depth " << report.depth
              << "), " << report.sequents_checked << " sequents\n";
    for ( auto const& [r, n] : report.valid_counts )
      std::cout << "  " << r << "-valid: " << n << "\n";
    std::cout << "ST/CL disagreements: " << report.st_cl_disagreements << "\n"
              << "SS-valid not ST-valid: " << report.ss_not_st << "\n"
              << "TS-valid not SS-valid: " << report.ts_not_ss << "\n"
              << "TS-valid not TT-valid: " << report.ts_not_tt << "\n";
    for ( auto const& e : report.examples )
      std::cout << "  " << e << "\n";
  }
  return report.clean() ? exit_ok : exit_invalid;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Three-valued semantics, consequence relations and proof checking for the Bridge paradox" };
  app.require_subcommand( 1 );

  eval_args ea;
  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a closed formula in a model or at a moment of a frame" );
  eval_cmd->add_option( "formula", ea.formula_text, "Formula text" )->required();
  eval_cmd->add_option( "-m,--model", ea.model_path, "Model JSON file" );
  eval_cmd->add_option( "--frame", ea.frame_path, "Branching frame JSON file" );
  eval_cmd->add_option( "--at", ea.moment, "Moment of the frame (default t0)" );
  eval_cmd->add_option( "--history", ea.history, "Restrict to one history of the frame" );
  eval_cmd->add_option( "--family", ea.family, "strong-kleene or cooper" );
  eval_cmd->add_flag( "--trace", ea.trace, "Print every evaluated subformula" );
  eval_cmd->add_flag( "--json", ea.as_json, "JSON output" );

  check_args ca;
  auto* check_cmd = app.add_subcommand( "check", "Decide a sequent file by model enumeration" );
  check_cmd->add_option( "sequent", ca.path, "Sequent JSON file" )->required();
  check_cmd->add_option( "--relation", ca.relation_text, "cl, ss, tt, st or ts" );
  check_cmd->add_option( "--family", ca.family, "strong-kleene or cooper" );
  check_cmd->add_flag( "--transparent", ca.transparent, "Keep only transparent models" );
  check_cmd->add_option( "--cap", ca.cap, "Maximum number of enumerated atoms" );
  check_cmd->add_flag( "--json", ca.as_json, "JSON output" );

  proof_args pa;
  auto* proof_cmd = app.add_subcommand( "proof", "Check a proof script step by step" );
  proof_cmd->add_option( "proof", pa.source, "Script file, or builtin:NAME" )->required();
  proof_cmd->add_option( "--relation", pa.relation_text, "Comma-separated relations; the first decides the exit code" );
  proof_cmd->add_option( "--family", pa.family, "strong-kleene or cooper (default: cooper for tt, else strong-kleene)" );
  proof_cmd->add_flag( "--transparent", pa.transparent, "Force transparency on" );
  proof_cmd->add_option( "--cap", pa.cap, "Maximum number of enumerated atoms" );
  proof_cmd->add_flag( "--json", pa.as_json, "JSON output" );
  proof_cmd->add_flag( "--print", pa.print_script, "Print the canonical script and exit" );

  scenario_args sa;
  auto* scenario_cmd = app.add_subcommand( "scenario", "Run a canned analysis" );
  scenario_cmd->require_subcommand( 1 );
  auto* run_cmd = scenario_cmd->add_subcommand( "run", "Run a scenario" );
  run_cmd->add_option( "name", sa.name, "buridan, cervantes, jacquette or liar-bridge" )->required();
  run_cmd->add_flag( "--json", sa.as_json, "JSON output" );
  run_cmd->add_flag( "--check-golden", sa.check_golden, "Compare the JSON report with the golden file" );
  run_cmd->add_option( "--golden-dir", sa.golden_dir, "Directory of golden reports (default data/golden)" );
  auto* list_cmd = scenario_cmd->add_subcommand( "list", "List scenarios" );

  agreement_args aa;
  auto* agreement_cmd = app.add_subcommand( "agreement", "Compare ST with CL and check containments over a formula pool" );
  agreement_cmd->add_option( "--atoms", aa.atoms, "Number of atoms (at most 3)" );
  agreement_cmd->add_option( "--depth", aa.depth, "Pool depth" );
  agreement_cmd->add_option( "--cap", aa.cap, "Maximum number of atoms" );
  agreement_cmd->add_flag( "--json", aa.as_json, "JSON output" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return exit_parse;
  }

  try
  {
    if ( *eval_cmd )
      return cmd_eval( ea );
    if ( *check_cmd )
      return cmd_check( ca );
    if ( *proof_cmd )
      return cmd_proof( pa );
    if ( *list_cmd )
    {
      for ( auto n : scenario_names )
        std::cout << n << "\n";
      return exit_ok;
    }
    if ( *run_cmd )
      return cmd_scenario( sa );
    if ( *agreement_cmd )
      return cmd_agreement( aa );
  }
  catch ( parse_error const& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( json::exception const& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( input_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
  catch ( cap_exceeded const& e )
  {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  }
  catch ( semantic_error const& e )
  {
    std::cerr << "semantic error: " << e.what() << "\n";
    return exit_semantic;
  }
  catch ( proof_error const& e )
  {
    std::cerr << "proof error: " << e.what() << "\n";
    return exit_semantic;
  }
  return exit_parse;
}
