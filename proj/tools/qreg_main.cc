#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qreg/constructions.hpp"
#include "qreg/pipeline.hpp"

namespace {

qreg::FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return qreg::FieldSpec::rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    try {
      return qreg::FieldSpec::prime(std::stoll(s.substr(1)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw std::runtime_error("unknown field '" + s + "': expected Q or F<p>");
}

struct CommonFlags {
  int truncate = 8;
  int maxstep = -1;
  std::string field;
  std::string json_path;
  bool no_duality = false;
  bool tor = false;
  unsigned long long seed = 0;
  std::string input;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_maxstep) {
  cmd->add_option("input", f.input, "presentation file")->required();
  cmd->add_option("--truncate", f.truncate, "truncation degree")->capture_default_str();
  if (with_maxstep) {
    cmd->add_option("--maxstep", f.maxstep, "resolution step limit (default: truncation)");
    cmd->add_flag("--no-duality-check", f.no_duality, "skip the Betti duality cross-check");
    cmd->add_flag("--tor", f.tor, "cross-check the resolutions against the bar complex");
  }
  cmd->add_option("--field", f.field, "coefficient field, Q or F<p> (overrides the file)");
  cmd->add_option("--json", f.json_path, "write the full report as JSON to this path");
  cmd->add_option("--seed", f.seed, "seed for the sampled consistency checks")
      ->capture_default_str();
}

qreg::RunOptions options_from(const CommonFlags& f) {
  qreg::RunOptions opt;
  opt.truncation = f.truncate;
  opt.maxstep = f.maxstep;
  if (!f.field.empty()) {
    opt.field = parse_field(f.field);
    opt.field_explicit = true;
  }
  opt.run_duality = !f.no_duality;
  opt.run_tor_oracle = f.tor;
  opt.seed = f.seed;
  opt.input_name = f.input;
  return opt;
}

void emit(const qreg::Report& r, const CommonFlags& f) {
  if (!f.json_path.empty()) {
    std::ofstream out(f.json_path);
    if (!out) throw std::runtime_error("cannot write " + f.json_path);
    out << qreg::report_to_json(r);
  }
  std::cout << qreg::report_to_text(r);
}

struct GenFlags {
  std::string family;
  int vars = 2;
  int n = 2;
  std::string q = "2";
  int vertices = 1;
  std::vector<std::string> gens;
  std::string quiver = "a2";
  std::vector<std::string> operands;
  std::string field = "Q";
  std::string output;
};

qreg::Presentation generate(const GenFlags& g) {
  qreg::FieldSpec field = parse_field(g.field);
  if (g.family == "polynomial") return qreg::polynomial_algebra(g.vars, field);
  if (g.family == "free") return qreg::free_algebra(g.vars, field);
  if (g.family == "skew") {
    mpq_class q;
    if (q.set_str(g.q, 10) != 0) throw std::runtime_error("bad skew parameter '" + g.q + "'");
    q.canonicalize();
    return qreg::skew_polynomial(q, field);
  }
  if (g.family == "tensor") {
    std::vector<std::tuple<int, int, int>> gens;
    for (const auto& spec : g.gens) {
      int src = 0, tgt = 0, deg = 1;
      if (std::sscanf(spec.c_str(), "%d:%d:%d", &src, &tgt, &deg) < 2) {
        throw std::runtime_error("bad generator '" + spec + "': expected src:tgt[:deg]");
      }
      gens.emplace_back(src, tgt, deg);
    }
    return qreg::tensor_algebra_presentation(g.vertices, gens, field);
  }
  if (g.family == "preprojective") return qreg::preprojective_named(g.quiver, field);
  if (g.family == "mckay") return qreg::mckay_z2(field);
  if (g.family == "semisimple") return qreg::semisimple(g.n, field);
  if (g.family == "dsum" || g.family == "tprod") {
    if (g.operands.size() != 2) {
      throw std::runtime_error(g.family + " needs two presentation files");
    }
    qreg::Presentation a = qreg::read_presentation_file(g.operands[0]);
    qreg::Presentation b = qreg::read_presentation_file(g.operands[1]);
    return g.family == "dsum" ? qreg::direct_sum(a, b) : qreg::tensor_product(a, b);
  }
  throw std::runtime_error("unknown family '" + g.family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded quiver algebras: expansion, resolutions, regularity certification"};
  app.require_subcommand(1);

  CommonFlags check_f, resolve_f, hilbert_f;
  auto* check_cmd =
      app.add_subcommand("check", "classify the algebra and certify or refute regularity");
  add_common(check_cmd, check_f, true);
  auto* resolve_cmd =
      app.add_subcommand("resolve", "minimal resolutions and Betti data, no verdict");
  add_common(resolve_cmd, resolve_f, true);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert table and growth estimate");
  add_common(hilbert_cmd, hilbert_f, false);

  GenFlags gen_f;
  auto* gen_cmd = app.add_subcommand("gen", "emit a presentation from a named family");
  gen_cmd->add_option("family", gen_f.family,
                      "polynomial | free | skew | tensor | preprojective | mckay | "
                      "semisimple | dsum | tprod")
      ->required();
  gen_cmd->add_option("operands", gen_f.operands, "input files for dsum / tprod");
  gen_cmd->add_option("--vars", gen_f.vars, "variables for polynomial / free")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen_f.n, "vertices for semisimple")->capture_default_str();
  gen_cmd->add_option("--q", gen_f.q, "parameter for skew")->capture_default_str();
  gen_cmd->add_option("--vertices", gen_f.vertices, "vertices for tensor")
      ->capture_default_str();
  gen_cmd->add_option("--gen", gen_f.gens, "tensor generator src:tgt[:deg], repeatable");
  gen_cmd->add_option("--quiver", gen_f.quiver, "a2 | kronecker2 | loop1")
      ->capture_default_str();
  gen_cmd->add_option("--field", gen_f.field, "coefficient field")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_f.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check_cmd) {
      qreg::Presentation p = qreg::read_presentation_file(check_f.input);
      qreg::Report r = qreg::run_check(p, options_from(check_f));
      emit(r, check_f);
      return qreg::exit_code_for(r.verdict);
    }
    if (*resolve_cmd) {
      qreg::Presentation p = qreg::read_presentation_file(resolve_f.input);
      qreg::Report r = qreg::run_resolve(p, options_from(resolve_f));
      emit(r, resolve_f);
      return 0;
    }
    if (*hilbert_cmd) {
      qreg::Presentation p = qreg::read_presentation_file(hilbert_f.input);
      qreg::Report r = qreg::run_hilbert(p, options_from(hilbert_f));
      emit(r, hilbert_f);
      return 0;
    }
    if (*gen_cmd) {
      qreg::Presentation p = generate(gen_f);
      std::string text = qreg::serialize(p);
      if (gen_f.output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_f.output);
        if (!out) throw std::runtime_error("cannot write " + gen_f.output);
        out << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
