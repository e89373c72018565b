#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cpf/braid.hpp"
#include "cpf/error.hpp"
#include "cpf/fixture.hpp"
#include "cpf/verifier.hpp"

namespace cpf::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> color_names(const BraidWord& b, const std::string& spec) {
  if (spec == "auto") return auto_color_names(b);
  std::vector<std::string> names = split(spec, ',');
  if (names.size() != b.strands) {
    throw ParseError("--colors lists " + std::to_string(names.size()) + " names for " + std::to_string(b.strands) +
                     " strands");
  }
  for (const auto& n : names) {
    if (!Ring::valid_name(n)) throw ParseError("invalid color name '" + n + "'");
  }
  return names;
}

std::string components_text(const OutputRecord& r, Format format) {
  std::vector<std::string> cycles;
  for (const auto& c : r.components) {
    std::vector<std::string> pos;
    for (std::size_t p : c) pos.push_back(std::to_string(p));
    cycles.push_back(format == Format::kText ? "{" + join(pos, ",") + "}" : join(pos, ","));
  }
  return join(cycles, format == Format::kText ? " " : ";");
}

}  // namespace

std::size_t max_strands() {
  std::size_t cap = 12;
  if (const char* env = std::getenv("CPF_MAX_STRANDS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw ParseError("CPF_MAX_STRANDS must be a positive integer");
    cap = static_cast<std::size_t>(v);
  }
  return std::min(cap, kMaxFactors);
}

OutputRecord cmd_compute(const ComputeRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  if (request.strands == 0 || request.strands > max_strands()) {
    throw ParseError("--strands must be between 1 and " + std::to_string(max_strands()));
  }
  const BraidWord b = parse_braid(request.braid, request.strands);
  if (request.open < 1 || request.open > b.strands) {
    throw ParseError("--open must be between 1 and " + std::to_string(b.strands));
  }
  const std::vector<std::string> names = color_names(b, request.colors);

  std::vector<std::string> distinct;
  for (const auto& n : names) {
    if (std::find(distinct.begin(), distinct.end(), n) == distinct.end()) distinct.push_back(n);
  }
  const RingPtr ring = Ring::colors(distinct);
  Coloring coloring;
  for (const auto& n : names) coloring.push_back(ring->var(n));

  const CpfResult result = cpf(ring, b, coloring, request.open - 1);

  OutputRecord rec;
  rec.braid = braid_text(b);
  rec.strands = b.strands;
  rec.colors = join(names, ",");
  rec.open = request.open;
  for (const auto& cycle : components(b)) {
    std::vector<std::size_t> one_based;
    for (std::size_t p : cycle) one_based.push_back(p + 1);
    rec.components.push_back(std::move(one_based));
  }
  rec.value = result.value.to_string();
  rec.numerator = result.value.num().to_string();
  rec.denominator = result.value.den_text();
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string format_record(const OutputRecord& r, Format format, bool timing) {
  std::ostringstream out;
  if (format == Format::kText) {
    out << "braid:       " << (r.braid.empty() ? "(identity)" : r.braid) << "\n"
        << "strands:     " << r.strands << "\n"
        << "colors:      " << r.colors << "\n"
        << "open:        " << r.open << "\n"
        << "components:  " << components_text(r, format) << "\n"
        << "value:       " << r.value << "\n"
        << "numerator:   " << r.numerator << "\n"
        << "denominator: " << (r.denominator.empty() ? "1" : r.denominator) << "\n";
    if (timing) out << "time_ms:     " << std::fixed << std::setprecision(3) << r.millis << "\n";
  } else {
    out << "braid=" << r.braid << "\tstrands=" << r.strands << "\tcolors=" << r.colors << "\topen=" << r.open
        << "\tcomponents=" << components_text(r, format) << "\tnumerator=" << r.numerator
        << "\tdenominator=" << r.denominator;
    if (timing) out << "\ttime_ms=" << std::fixed << std::setprecision(3) << r.millis;
    out << "\n";
  }
  return out.str();
}

const std::vector<Preset>& cmd_presets() {
  static const std::vector<Preset> presets{
      {"unknot", "", 1},
      {"hopf", "1 1", 2},
      {"trefoil", "1 1 1", 2},
      {"figure-eight", "1 -2 1 -2", 3},
      {"torus-2-2", "1 1", 2},
      {"torus-2-4", "1 1 1 1", 2},
      {"torus-2-6", "1 1 1 1 1 1", 2},
      {"torus-2-8", "1 1 1 1 1 1 1 1", 2},
      {"chain-3", "1 1 2 2", 3},
      {"borromean", "1 -2 1 -2 1 -2", 3},
  };
  return presets;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : cmd_presets()) {
    if (p.name == name) return p;
  }
  throw ParseError("unknown preset '" + name + "'");
}

ComputeRequest parse_batch_line(const std::string& line) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  ComputeRequest req;
  if (head == "preset") {
    std::string name;
    if (!(in >> name)) throw ParseError("preset line needs a name");
    const Preset& p = find_preset(name);
    req.braid = p.braid;
    req.strands = p.strands;
    if (!(in >> req.open)) req.open = 1;
    return req;
  }
  try {
    req.strands = std::stoul(head);
  } catch (const std::exception&) {
    throw ParseError("batch line must start with a strand count or 'preset'");
  }
  if (!(in >> req.colors >> req.open)) throw ParseError("batch line needs <strands> <colors> <open> [letters]");
  std::getline(in, req.braid);
  return req;
}

namespace {

int run_compute(const ComputeRequest& req, const std::string& batch, Format format, bool timing,
                std::ostream& out, std::ostream& err) {
  if (batch.empty()) {
    out << format_record(cmd_compute(req), format, timing);
    return kExitOk;
  }
  std::ifstream file(batch);
  if (!file) throw ParseError("cannot open batch file '" + batch + "'");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t n = 1; std::getline(file, line); ++n) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.emplace_back(n, line);
  }
  std::vector<std::future<OutputRecord>> jobs;
  jobs.reserve(lines.size());
  for (const auto& [n, text] : lines) {
    jobs.push_back(std::async(std::launch::async, [text = text] { return cmd_compute(parse_batch_line(text)); }));
  }
  int status = kExitOk;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    try {
      out << format_record(jobs[k].get(), format, timing);
    } catch (const Error& e) {
      err << "error: line " << lines[k].first << ": " << e.what() << "\n";
      status = kExitInputError;
    }
  }
  return status;
}

SparseMap named_matrix(const std::string& name) {
  const RingPtr ring = verification_ring();
  const Variable t = ring->var("t"), s = ring->var("s"), u = ring->var("u");
  if (name == "r-pos") return r_pos(ring, t, s);
  if (name == "r-neg") return r_neg(ring, t, s);
  if (name == "II-product") return compose(r_pos(ring, s, t), r_pos(ring, t, s));
  if (name == "II-inverse") return compose(r_neg(ring, t, s), r_neg(ring, s, t));
  if (name == "M1") return build_M(1, ring, t, s, u);
  if (name == "M2") return build_M(2, ring, t, s, u);
  if (name == "M3") return build_M(3, ring, t, s, u);
  throw ParseError("unknown matrix '" + name + "' (expected r-pos, r-neg, II-product, II-inverse, M1, M2, M3)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conway potential function of colored braid closures"};
  app.require_subcommand(1);

  ComputeRequest req;
  std::string format_name = "text";
  std::string batch;
  std::string preset;
  bool timing = false;
  auto* compute = app.add_subcommand("compute", "Compute the potential function of a braid closure");
  compute->add_option("braid", req.braid, "Signed generator word, e.g. \"1 -2 1 -2\"");
  auto* strands_opt = compute->add_option("--strands", req.strands, "Number of strands");
  compute->add_option("--colors", req.colors, "Comma-separated color per strand, or auto");
  compute->add_option("--open", req.open, "Strand left open (1-based)");
  compute->add_option("--format", format_name, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  compute->add_option("--batch", batch, "File with one request per line");
  compute->add_option("--preset", preset, "Named input from 'cpf presets'");
  compute->add_flag("--timing", timing, "Include evaluation time in the output");

  std::string relation = "all";
  bool with_fixtures = false;
  auto* verify = app.add_subcommand("verify", "Check the algebraic identities behind the invariant");
  verify->add_option("relation", relation, "Relation id or all");
  verify->add_flag("--with-fixtures", with_fixtures, "Also compare against the reference matrices");

  auto* presets = app.add_subcommand("presets", "List named braids");
  presets->add_option("--format", format_name, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::string matrix_name;
  auto* matrix = app.add_subcommand("matrix", "Print a computed matrix in fixture format");
  matrix->add_option("name", matrix_name, "r-pos, r-neg, II-product, II-inverse, M1, M2 or M3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const Format format = format_name == "machine" ? Format::kMachine : Format::kText;

  try {
    if (compute->parsed()) {
      if (!preset.empty()) {
        const Preset& p = find_preset(preset);
        if (!req.braid.empty()) throw ParseError("give either a braid or --preset, not both");
        req.braid = p.braid;
        if (strands_opt->count() == 0) req.strands = p.strands;
      } else if (strands_opt->count() == 0 && batch.empty()) {
        throw ParseError("--strands is required");
      }
      return run_compute(req, batch, format, timing, out, err);
    }
    if (verify->parsed()) {
      const auto reports = run_verification(relation, VerifyOptions{with_fixtures});
      bool ok = true;
      for (const auto& r : reports) {
        out << r.to_text();
        ok = ok && r.passed;
      }
      out << (ok ? "all relations passed" : "verification FAILED") << " (" << reports.size() << " relations)\n";
      return ok ? kExitOk : kExitVerificationFailed;
    }
    if (presets->parsed()) {
      for (const auto& p : cmd_presets()) {
        if (format == Format::kMachine) {
          out << "name=" << p.name << "\tbraid=" << p.braid << "\tstrands=" << p.strands << "\tcolors=auto\n";
        } else {
          out << std::left << std::setw(14) << p.name << " strands=" << p.strands << "  braid=\""
              << p.braid << "\"\n";
        }
      }
      return kExitOk;
    }
    if (matrix->parsed()) {
      out << to_fixture(named_matrix(matrix_name));
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cpf::cli
