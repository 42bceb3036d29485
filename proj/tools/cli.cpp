#include "cli.hpp"

#include "gradedk/invariants.hpp"
#include "gradedk/random.hpp"
#include "gradedk/smith.hpp"
#include "gradedk/tails.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

namespace gradedk::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

enum class Format { text, machine };

struct Options {
  std::string file;
  Format format = Format::text;
  bool emit_matrices = false;
  bool emit_kernel_basis = false;
  std::uint64_t seed = 1;
  std::vector<std::string> tail_points;
  std::size_t max_length = 4;
};

using NamedGroup = std::pair<std::string, AbelianGroup>;

// Everything a subcommand produces. Rendered once, in either format.
struct Report {
  Report() = default;
  Report(std::string cmd, std::string input_digest)
      : command(std::move(cmd)), digest(std::move(input_digest)) {}

  std::string command;
  std::string digest;
  std::vector<std::string> summary;            // text-only header lines
  std::vector<std::vector<NamedGroup>> groups;  // one text line per block
  std::vector<std::string> details;            // text-only, after the groups
  std::vector<std::pair<std::string, IntMatrix>> matrices;
  std::vector<std::pair<std::string, std::vector<std::vector<Integer>>>> bases;
  std::vector<Check> checks;
  ordered_json extra = ordered_json::object();
  bool passed = true;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return "sha256:" + os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json integers_to_json(const std::vector<Integer>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json out = ordered_json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  if (m.row_labels()) out["row_labels"] = *m.row_labels();
  if (m.col_labels()) out["col_labels"] = *m.col_labels();
  ordered_json entries = ordered_json::array();
  for (const auto& row : m.to_rows()) entries.push_back(integers_to_json(row));
  out["entries"] = std::move(entries);
  return out;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("matrix entry must be an integer or a decimal string: " + j.dump());
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe(const KTheoryProblem& p) {
  return "graph: " + std::to_string(p.graph.vertex_count()) + " vertices, " +
         std::to_string(p.graph.edge_count()) + " edges, relative set {" +
         join(p.relative_set.members(), ", ") + "}";
}

void render_text(const Report& r, std::ostream& out) {
  out << "command: " << r.command << '\n';
  out << "input: " << r.digest << '\n';
  for (const auto& line : r.summary) out << line << '\n';
  for (const auto& block : r.groups) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ", ";
      out << block[i].first << " = " << block[i].second;
    }
    out << '\n';
  }
  for (const auto& line : r.details) out << line << '\n';
  for (const auto& [name, m] : r.matrices) {
    out << name << " (" << m.rows() << " x " << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out << "  ";
      if (m.row_labels()) out << (*m.row_labels())[i] << ": ";
      out << '[';
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
      out << "]\n";
    }
  }
  for (const auto& [name, basis] : r.bases) {
    out << name << ": " << basis.size() << " vector(s)\n";
    for (const auto& v : basis) {
      out << "  (";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
      out << ")\n";
    }
  }
  for (const auto& c : r.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  if (!r.checks.empty()) out << (r.passed ? "all checks passed" : "CHECKS FAILED") << '\n';
}

void render_machine(const Report& r, std::ostream& out) {
  ordered_json doc = ordered_json::object();
  doc["command"] = r.command;
  doc["input_digest"] = r.digest;
  ordered_json groups = ordered_json::object();
  for (const auto& block : r.groups)
    for (const auto& [name, g] : block) groups[name] = group_to_json(g);
  doc["groups"] = std::move(groups);
  if (!r.matrices.empty()) {
    ordered_json ms = ordered_json::object();
    for (const auto& [name, m] : r.matrices) ms[name] = matrix_to_json(m);
    doc["matrices"] = std::move(ms);
  }
  if (!r.bases.empty()) {
    ordered_json bs = ordered_json::object();
    for (const auto& [name, basis] : r.bases) {
      ordered_json vs = ordered_json::array();
      for (const auto& v : basis) vs.push_back(integers_to_json(v));
      bs[name] = std::move(vs);
    }
    doc["kernel_bases"] = std::move(bs);
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  for (const auto& [key, value] : r.extra.items()) doc[key] = value;
  doc["passed"] = r.passed;
  out << doc.dump(2) << '\n';
}

ordered_json tuple_to_json(const GroupTuple& t) {
  return ordered_json{{"K0^gr", group_to_json(t.k0)},
                      {"K1^gr", group_to_json(t.k1)},
                      {"K0_gr", group_to_json(t.kh0)},
                      {"K1_gr", group_to_json(t.kh1)}};
}

std::string tuple_text(const GroupTuple& t) {
  return "K0^gr = " + t.k0.to_string() + ", K1^gr = " + t.k1.to_string() +
         ", K0_gr = " + t.kh0.to_string() + ", K1_gr = " + t.kh1.to_string();
}

void finish(Report& r) {
  for (const auto& c : r.checks) r.passed = r.passed && c.passed;
}

// -- subcommands -----------------------------------------------------------

struct LoadedGraph {
  GraphDocument doc;
  std::string digest;
};

LoadedGraph load_graph(const Options& o) {
  GraphDocument doc = parse_graph_document(read_file(o.file));
  std::string digest = sha256_hex(normalized_document(doc));
  return {std::move(doc), std::move(digest)};
}

void add_theory(Report& r, const GradedKTheoryResult& kt, const Options& o) {
  r.groups.push_back({{"K0^gr", kt.k0}, {"K1^gr", kt.k1}});
  if (o.emit_matrices) {
    r.matrices.emplace_back("signed adjacency A", kt.problem.signed_adjacency);
    r.matrices.emplace_back("iota - A^t", kt.matrix);
  }
  if (o.emit_kernel_basis) r.bases.emplace_back("kernel basis of iota - A^t", kt.kernel_basis);
}

void add_homology(Report& r, const GradedKHomologyResult& kh, const Options& o) {
  r.groups.push_back({{"K0_gr", kh.k0}, {"K1_gr", kh.k1}});
  if (o.emit_matrices) r.matrices.emplace_back("pi - A~", kh.matrix);
  if (o.emit_kernel_basis) r.bases.emplace_back("kernel basis of pi - A~", kh.kernel_basis);
}

Report cmd_ktheory(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const auto p = make_problem(doc);
  Report r{"ktheory", digest};
  r.summary.push_back(describe(p));
  add_theory(r, graded_k_theory(p), o);
  return r;
}

Report cmd_khomology(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const auto p = make_problem(doc);
  Report r{"khomology", digest};
  r.summary.push_back(describe(p));
  add_homology(r, graded_k_homology(p), o);
  return r;
}

Report cmd_all(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const auto p = make_problem(doc);
  Report r{"all", digest};
  r.summary.push_back(describe(p));
  const DualityReport d = duality_report(p);
  add_theory(r, d.theory, o);
  add_homology(r, d.homology, o);
  r.checks = d.checks;
  return r;
}

Report cmd_classical(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const Graph ungraded = with_uniform_parity(doc.graph, Parity::even);
  const auto p = make_problem(ungraded, regular_vertices(ungraded));
  Report r{"classical", digest};
  r.summary.push_back(describe(p) + " (all parities 0)");
  add_theory(r, graded_k_theory(p), o);
  add_homology(r, graded_k_homology(p), o);
  return r;
}

Report cmd_snf(const Options& o) {
  const std::string text = read_file(o.file);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed matrix document: ") + e.what(), o.file);
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw InputError("matrix document needs a 'matrix' array of rows");
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array()) throw InputError("each matrix row must be an array");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  std::size_t cols = 0;
  if (doc.contains("cols")) {
    if (!doc["cols"].is_number_unsigned()) throw InputError("'cols' must be a nonnegative integer");
    cols = doc["cols"].get<std::size_t>();
    if (!rows.empty() && rows.front().size() != cols) {
      throw InputError("'cols' disagrees with the row length");
    }
  }
  IntMatrix m;
  try {
    m = IntMatrix::from_rows(rows, cols);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  const SmithDecomposition s = smith_normal_form(m);
  Report r{"snf", sha256_hex(doc.dump())};
  r.summary.push_back("matrix: " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()) +
                      ", rank " + std::to_string(s.rank));
  std::vector<std::string> diag;
  for (const auto& d : s.diagonal()) diag.push_back(to_string(d));
  r.summary.push_back("diagonal: [" + join(diag, ", ") + "]");
  r.groups.push_back({{"coker", cokernel(m)}, {"ker", AbelianGroup::free(m.cols() - s.rank)}});
  r.extra["rank"] = s.rank;
  r.extra["diagonal"] = integers_to_json(s.diagonal());
  if (o.emit_matrices) {
    r.matrices.emplace_back("U", s.u);
    r.matrices.emplace_back("D", s.d);
    r.matrices.emplace_back("V", s.v);
  }
  if (o.emit_kernel_basis) r.bases.emplace_back("kernel basis", kernel_basis(m));
  return r;
}

Report cmd_tails(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const auto v_set = resolve_relative_set(doc.relative_set, doc.graph);
  const auto p = make_problem(doc.graph, v_set);
  Report r{"tails", digest};
  r.summary.push_back(describe(p));
  const GroupTuple base = group_tuple(p);
  r.groups.push_back({{"K0^gr", base.k0}, {"K1^gr", base.k1}});
  r.groups.push_back({{"K0_gr", base.kh0}, {"K1_gr", base.kh1}});

  const TailSweepResult result = sweep(doc.graph, v_set, TailSweepConfig(o.tail_points, o.max_length));
  ordered_json points = ordered_json::array();
  for (const auto& pt : result.points) {
    ordered_json j{{"at", pt.at}};
    if (!pt.report) {
      j["error"] = pt.error;
      r.checks.push_back({"tail at " + pt.at, false, pt.error});
    } else {
      const auto& rep = *pt.report;
      j["baseline"] = tuple_to_json(rep.baseline);
      ordered_json lengths = ordered_json::array();
      for (std::size_t i = 0; i < rep.per_length.size(); ++i) {
        lengths.push_back({{"length", i + 1}, {"groups", tuple_to_json(rep.per_length[i])}});
        r.details.push_back("tail at " + pt.at + ", length " + std::to_string(i + 1) + ": " +
                            tuple_text(rep.per_length[i]));
      }
      j["lengths"] = std::move(lengths);
      j["constant"] = rep.constant;
      j["matches_baseline"] = rep.matches_baseline;
      r.checks.push_back({"tail at " + pt.at, rep.passed(),
                          std::string(rep.constant ? "constant" : "not constant") +
                              " over lengths 1.." + std::to_string(o.max_length) + ", " +
                              (rep.matches_baseline ? "matches" : "differs from") +
                              " untailed groups"});
    }
    points.push_back(std::move(j));
  }
  r.extra["tails"] = std::move(points);
  return r;
}

Check transform_check(const std::string& label, const IntMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  const bool product = s.u * m.without_labels() * s.v == s.d;
  const Integer du = determinant(s.u);
  const Integer dv = determinant(s.v);
  const bool unimodular = abs(du) == 1 && abs(dv) == 1;
  return {label + ": U M V = D with U, V unimodular", product && unimodular,
          "det U = " + to_string(du) + ", det V = " + to_string(dv)};
}

Check oracle_check(const std::string& label, const IntMatrix& m) {
  constexpr std::size_t kMaxOracleDim = 8;
  const std::string name = label + ": SNF diagonal = determinantal divisor quotients";
  if (std::max(m.rows(), m.cols()) > kMaxOracleDim) {
    return {name, true, "skipped, matrix larger than " + std::to_string(kMaxOracleDim)};
  }
  const auto divisors = determinantal_divisors(m);
  auto diag = smith_normal_form(m).diagonal();
  std::vector<Integer> expected(diag.size(), 0);
  Integer previous = 1;
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    expected[k] = divisors[k] / previous;
    previous = divisors[k];
  }
  std::vector<std::string> got;
  for (const auto& d : diag) got.push_back(to_string(d));
  return {name, diag == expected, "[" + join(got, ", ") + "]"};
}

Check kernel_check(const std::string& label, const IntMatrix& m,
                   const std::vector<std::vector<Integer>>& basis, std::size_t rank) {
  bool ok = basis.size() + rank == m.cols();
  for (const auto& v : basis) {
    for (const auto& x : m * v) ok = ok && x == 0;
  }
  return {label + ": kernel basis annihilates and has size cols - rank", ok,
          std::to_string(basis.size()) + " vector(s)"};
}

Report cmd_check(const Options& o) {
  const auto [doc, digest] = load_graph(o);
  const auto v_set = resolve_relative_set(doc.relative_set, doc.graph);
  const auto p = make_problem(doc.graph, v_set);
  Report r{"check", digest};
  r.summary.push_back(describe(p));
  r.summary.push_back("seed: " + std::to_string(o.seed));
  r.extra["seed"] = o.seed;

  const DualityReport d = duality_report(p);
  add_theory(r, d.theory, o);
  add_homology(r, d.homology, o);
  r.checks = d.checks;

  r.checks.push_back(transform_check("iota - A^t", d.theory.matrix));
  r.checks.push_back(oracle_check("iota - A^t", d.theory.matrix));
  r.checks.push_back(
      kernel_check("iota - A^t", d.theory.matrix, d.theory.kernel_basis, d.theory.rank));
  r.checks.push_back(
      kernel_check("pi - A~", d.homology.matrix, d.homology.kernel_basis, d.homology.rank));

  Rng rng(o.seed);
  const GroupTuple base{d.theory.k0, d.theory.k1, d.homology.k0, d.homology.k1};
  constexpr int kTrials = 8;
  {
    bool ok = true;
    for (int t = 0; t < kTrials; ++t) {
      const Graph relabelled =
          with_vertex_order(doc.graph, random_permutation(rng, doc.graph.vertices()));
      ok = ok && group_tuple(make_problem(relabelled, v_set)) == base;
    }
    r.checks.push_back({"groups invariant under vertex relabelling", ok,
                        std::to_string(kTrials) + " random orders"});
  }
  {
    bool ok = true;
    const IntMatrix& m = d.theory.matrix;
    for (int t = 0; t < kTrials; ++t) {
      const IntMatrix moved =
          random_unimodular(rng, m.rows()) * m.without_labels() * random_unimodular(rng, m.cols());
      ok = ok && cokernel(moved) == d.theory.k0 && kernel(moved) == d.theory.k1;
    }
    r.checks.push_back({"groups invariant under unimodular change of basis", ok,
                        std::to_string(kTrials) + " random transforms"});
  }
  for (const auto& v : doc.graph.vertices()) {
    if (doc.graph.in_degree(v) != 0) continue;
    const auto rep = tail_invariance_report(doc.graph, v_set, v, 3);
    r.checks.push_back({"tail invariance at " + v, rep.passed(), "lengths 1..3"});
  }
  return r;
}

}  // namespace

nlohmann::json group_to_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_string(d));
  return json{{"free_rank", g.free_rank()}, {"invariant_factors", factors},
              {"text", g.to_string()}};
}

AbelianGroup group_from_json(const nlohmann::json& j) {
  std::vector<Integer> factors;
  for (const auto& d : j.at("invariant_factors")) factors.push_back(parse_integer(d.get<std::string>()));
  AbelianGroup g(j.at("free_rank").get<std::size_t>(), std::move(factors));
  if (j.contains("text") && AbelianGroup::parse(j.at("text").get<std::string>()) != g) {
    throw std::invalid_argument("group text disagrees with its structured form");
  }
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded K-theory and K-homology of relative Cuntz-Krieger algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--emit-matrices", o.emit_matrices, "Include the integer matrices");
  app.add_flag("--emit-kernel-basis", o.emit_kernel_basis, "Include one kernel basis");
  app.add_option("--seed", o.seed, "Seed for randomised checks");

  using Handler = Report (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input document")->required();
    commands.emplace_back(sub, h);
    return sub;
  };
  add("ktheory", "Graded K-theory K0^gr, K1^gr", cmd_ktheory);
  add("khomology", "Graded K-homology K0_gr, K1_gr", cmd_khomology);
  add("all", "K-theory, K-homology and the duality report", cmd_all);
  add("classical", "Ungraded invariants of C*(E): parities 0, all regular vertices",
      cmd_classical);
  add("snf", "Smith normal form of a matrix document", cmd_snf);
  CLI::App* tails = add("tails", "Tail-invariance sweep", cmd_tails);
  tails->add_option("--at", o.tail_points, "Attachment vertex (repeatable)")->required();
  tails->add_option("--max-length", o.max_length, "Longest tail")->required();
  add("check", "Full invariant suite", cmd_check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  o.format = format == "machine" ? Format::machine : Format::text;

  Report report;
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) report = handler(o);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  finish(report);
  if (o.format == Format::machine) {
    render_machine(report, out);
  } else {
    render_text(report, out);
  }
  return report.passed ? kOk : kCheckFailed;
}

}  // namespace gradedk::cli
