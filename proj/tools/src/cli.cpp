#include "wordhom_cli/cli.hpp"

#include "wordhom/complex.hpp"
#include "wordhom/error.hpp"
#include "wordhom/filler.hpp"
#include "wordhom/genpos.hpp"
#include "wordhom/group.hpp"
#include "wordhom/homology.hpp"
#include "wordhom/json_io.hpp"
#include "wordhom/limits.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>

namespace wordhom::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string format;  // empty: the subcommand's default
  unsigned jobs = 1;
  std::optional<std::size_t> max_basis;
  std::optional<std::size_t> max_generators;
  double time_budget = 0.0;  // seconds, 0 = none
  std::uint64_t seed = 42;

  ResourceLimits limits() const {
    auto l = ResourceLimits::from_environment();
    if (max_basis) l.max_basis = *max_basis;
    if (max_generators) l.max_generators = *max_generators;
    return l;
  }
  bool json_output(bool json_by_default) const { return format.empty() ? json_by_default : format == "json"; }
};

// The budget is checked between stages; a running stage is never interrupted.
class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(Clock::now()) {}

  void check(const std::string& stage) const {
    if (seconds_ <= 0) return;
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    if (elapsed.count() > seconds_)
      throw Error(ErrorCode::ResourceLimit, "time budget exceeded", "after " + stage);
  }

 private:
  double seconds_;
  Clock::time_point start_;
};

struct ComplexArgs {
  int m = 0;
  int p = 0;
  int dim = 0;
  int max_degree = -1;
  std::string base;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json read_json_file(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot open input file", path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("input is not valid JSON: ") + e.what(), path);
  }
}

std::unique_ptr<GeneralPositionRelation> relation_for(const ComplexArgs& shape) {
  if (shape.m > 0 && (shape.p > 0 || shape.dim > 0))
    throw Error(ErrorCode::InvalidInput, "give either --m or --p/--dim, not both");
  if (shape.m > 0) return std::make_unique<InjectiveRelation>(shape.m);
  if (shape.p <= 0 || shape.dim <= 0) throw Error(ErrorCode::InvalidInput, "need --m, or both --p and --dim");
  return std::make_unique<VectorRelation>(shape.p, shape.dim);
}

Word parse_base(const GeneralPositionRelation& G, const std::string& text) {
  if (text.empty()) return {};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("--base is not valid JSON: ") + e.what());
  }
  Word base = word_from_json(G.alphabet(), j);
  if (!G(base, {})) throw Error(ErrorCode::InvalidInput, "base word is not in general position", text);
  return base;
}

std::string group_name(int n) { return "S" + std::to_string(n); }

// homology / dump ------------------------------------------------------------

struct BuiltComplex {
  std::optional<ChainComplexRep> complex;
  std::optional<std::size_t> order;
  Word base;
};

BuiltComplex build(const std::string& kind, const ComplexArgs& shape, const RunConfig& cfg) {
  BuiltComplex b;
  const auto limits = cfg.limits();
  if (kind == "inj") {
    b.complex.emplace(build_injective(shape.m, limits));
  } else if (kind == "full") {
    b.complex.emplace(build_full(shape.m, shape.max_degree, limits));
  } else {
    auto G = relation_for(shape);
    b.base = parse_base(*G, shape.base);
    std::optional<int> cap;
    if (shape.max_degree >= 0) cap = shape.max_degree;
    b.complex.emplace(build_gp(*G, b.base, cap, limits));
    GpOrderOptions opts;
    opts.jobs = cfg.jobs;
    b.order = gp_order(*G, opts).value;
  }
  return b;
}

int cmd_homology(const std::string& kind, const ComplexArgs& shape, const RunConfig& cfg, std::ostream& out) {
  Deadline deadline(cfg.time_budget);
  auto b = build(kind, shape, cfg);
  const auto& cx = *b.complex;
  deadline.check("complex construction");
  const auto table = homology_table(cx);
  deadline.check("homology");

  // degrees through which the homology is claimed to vanish, and the top-degree claim for inj
  std::optional<int> vanish_through;
  if (kind == "inj") {
    vanish_through = shape.m - 1;
  } else if (kind == "full") {
    vanish_through = static_cast<int>(table.size()) - 1;
  } else {
    const auto l = static_cast<long>(b.base.size());
    const auto order = static_cast<long>(*b.order);
    if (order >= l + 1) vanish_through = static_cast<int>((order - l - 1) / 2);
  }
  std::vector<std::string> mismatches;
  for (std::size_t k = 0; k < table.size(); ++k)
    if (vanish_through && static_cast<int>(k) <= *vanish_through && !table[k].is_trivial())
      mismatches.push_back("H_" + std::to_string(k) + " = " + table[k].to_string());
  if (kind == "inj" && table.size() == static_cast<std::size_t>(shape.m) + 1) {
    const auto& top = table.back();
    if (Integer(top.free_rank) != derangement_count(shape.m) || !top.torsion.empty())
      mismatches.push_back("H_" + std::to_string(shape.m) + " = " + top.to_string());
  }

  if (cfg.json_output(false)) {
    json degrees = json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
      auto h = homology_to_json(table[k]);
      h["degree"] = k;
      degrees.push_back(h);
    }
    json j = {{"complex", cx.label()},
              {"alphabet", alphabet_to_json(cx.alphabet())},
              {"complete", cx.complete()},
              {"basis_sizes", cx.basis_sizes()},
              {"homology", degrees},
              {"vanishing_through", vanish_through ? json(*vanish_through) : json(nullptr)},
              {"verified", mismatches.empty()}};
    if (b.order) j["gp_order"] = *b.order;
    if (kind == "gp") j["base"] = word_to_json(cx.alphabet(), b.base);
    emit(out, j);
  } else {
    for (std::size_t k = 0; k < table.size(); ++k) out << "H_" << k << " = " << table[k].to_string() << '\n';
  }
  if (!mismatches.empty()) {
    std::string all;
    for (const auto& s : mismatches) all += (all.empty() ? "" : "; ") + s;
    throw Error(ErrorCode::VerificationFailed, "homology differs from the predicted value", all);
  }
  return 0;
}

int cmd_dump(const std::string& kind, const ComplexArgs& shape, const RunConfig& cfg, std::ostream& out) {
  auto b = build(kind, shape, cfg);
  emit(out, complex_to_json(*b.complex));
  return 0;
}

// fill -----------------------------------------------------------------------

struct FillArgs {
  std::string input;
  bool check = false;
  std::string base;
  std::size_t order = 0;
  bool allow_out_of_range = false;
};

int cmd_fill(const FillArgs& args, const RunConfig& cfg, std::ostream& out) {
  const json doc = read_json_file(args.input);
  const bool as_json = cfg.json_output(true);

  if (args.check) {
    auto cd = certificate_from_json(doc);
    const bool valid = boundary(cd.filling) == cd.input;
    if (as_json) {
      emit(out, {{"valid", valid}, {"degree", cd.input.degree()}, {"filling_terms", cd.filling.size()}});
    } else {
      out << (valid ? "valid" : "invalid") << ": boundary of the filling "
          << (valid ? "equals" : "differs from") << " the input\n";
    }
    if (!valid) throw Error(ErrorCode::VerificationFailed, "certificate does not validate");
    return 0;
  }

  auto cd = chain_from_json(doc);
  const Alphabet& A = cd.alphabet;
  std::optional<FillCertificate> cert;
  std::optional<Word> base = cd.base;
  if (A.is_letters() && !base && args.base.empty()) {
    cert.emplace(fill_injective(cd.chain, A.letter_count()));
  } else {
    std::unique_ptr<GeneralPositionRelation> G;
    if (A.is_letters())
      G = std::make_unique<InjectiveRelation>(A.letter_count());
    else
      G = std::make_unique<VectorRelation>(A.prime(), A.dim());
    if (!args.base.empty()) base = parse_base(*G, args.base);
    if (!base) base = Word{};
    if (!(*G)(*base, {})) throw Error(ErrorCode::InvalidInput, "base word is not in general position");
    FillGpOptions opts;
    opts.enforce_range = !args.allow_out_of_range;
    if (args.order > 0) {
      opts.order = args.order;
    } else {
      GpOrderOptions go;
      go.jobs = cfg.jobs;
      opts.order = gp_order(*G, go).value;
    }
    cert.emplace(fill_gp(cd.chain, *G, *base, opts));
  }

  if (as_json) {
    auto j = certificate_to_json(A, *cert);
    if (base) j["input"]["base"] = word_to_json(A, *base);
    emit(out, j);
  } else {
    out << "filled a degree-" << cert->input().degree() << " cycle with " << cert->input().size()
        << " terms; filling has " << cert->filling().size() << " terms in " << cert->steps().size()
        << " steps; " << (cert->verify() ? "valid" : "invalid") << '\n';
  }
  if (!cert->verify()) throw Error(ErrorCode::VerificationFailed, "certificate does not validate");
  return 0;
}

// gp-order / axioms ----------------------------------------------------------

int cmd_gp_order(const ComplexArgs& shape, std::size_t max_n, const RunConfig& cfg, std::ostream& out) {
  auto G = relation_for(shape);
  GpOrderOptions opts;
  opts.max_n = max_n;
  opts.jobs = cfg.jobs;
  const auto r = gp_order(*G, opts);
  if (cfg.json_output(true)) {
    emit(out, gp_order_to_json(G->alphabet(), r));
  } else if (r.exact) {
    out << "|G| = " << r.value << ", witness " << G->alphabet().describe(r.witness) << '\n';
  } else {
    out << "|G| >= " << r.value << " (no blocking sequence up to length " << max_n << ")\n";
  }
  return 0;
}

int cmd_axioms(const ComplexArgs& shape, std::size_t samples, const RunConfig& cfg, std::ostream& out) {
  auto G = relation_for(shape);
  const auto report = check_axioms(*G, default_sampler(*G), samples, cfg.seed);
  if (cfg.json_output(true)) {
    emit(out, axiom_report_to_json(G->alphabet(), report));
  } else {
    out << report.relation << ": " << report.trials << " triples, seed " << report.seed << ", "
        << report.violations << " violations\n";
    if (report.counterexample)
      out << "first violation: axiom " << report.counterexample->axiom << ", " << report.counterexample->detail
          << '\n';
  }
  if (!report.passed())
    throw Error(ErrorCode::VerificationFailed, "general-position axioms violated",
                report.counterexample ? report.counterexample->axiom : std::string());
  return 0;
}

// nakaoka / derangements -----------------------------------------------------

int cmd_nakaoka(int n, int max_degree, bool allow_large, const RunConfig& cfg, std::ostream& out) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidInput, "--max-degree must be >= 0");
  Deadline deadline(cfg.time_budget);
  auto limits = cfg.limits();
  if (allow_large) limits.max_generators = std::max<std::size_t>(limits.max_generators, 2'000'000);

  std::vector<NakaokaReport> rows;
  for (int m = 0; m <= max_degree; ++m) {
    rows.push_back(nakaoka_check(n, m, limits));
    deadline.check("degree " + std::to_string(m));
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && (!r.in_range || r.equal);

  if (cfg.json_output(false)) {
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{"m", r.m},
                       {"lhs", homology_to_json(r.lhs)},
                       {"rhs", homology_to_json(r.rhs)},
                       {"in_range", r.in_range},
                       {"equal", r.equal}});
    emit(out, {{"n", n}, {"rows", table}, {"verified", ok}});
  } else {
    for (const auto& r : rows)
      out << "m=" << r.m << "  H_" << r.m << "(" << group_name(n - 1) << ") = " << r.lhs.to_string() << "  H_" << r.m
          << "(" << group_name(n) << ") = " << r.rhs.to_string() << "  in_range=" << (r.in_range ? "true" : "false")
          << "  equal=" << (r.equal ? "true" : "false") << '\n';
  }
  if (!ok) throw Error(ErrorCode::VerificationFailed, "homology differs inside the stable range");
  return 0;
}

int cmd_derangements(int m, const RunConfig& cfg, std::ostream& out) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "--m must be >= 0");
  const Integer d = derangement_count(m);
  const Integer closed = rank_formula(m);
  if (cfg.json_output(false))
    emit(out, {{"m", m}, {"derangements", integer_to_json(d)}, {"closed_form", integer_to_json(closed)}});
  else
    out << "D_" << m << " = " << d << '\n';
  if (d != closed)
    throw Error(ErrorCode::VerificationFailed, "closed form disagrees with inclusion-exclusion", "m=" + std::to_string(m));
  return 0;
}

void report_error(std::ostream& err, const Error& e) { err << error_to_json(e).dump() << '\n'; }

void add_complex_options(CLI::App* sub, ComplexArgs& shape, const std::string& kind) {
  if (kind == "inj") {
    sub->add_option("--m", shape.m, "number of letters")->required();
  } else if (kind == "full") {
    sub->add_option("--m", shape.m, "number of letters")->required();
    sub->add_option("--max-degree", shape.max_degree, "truncation degree")->required();
  } else {
    sub->add_option("--p", shape.p, "prime field size");
    sub->add_option("--dim", shape.dim, "vector space dimension");
    sub->add_option("--m", shape.m, "letters, for the injective relation");
    sub->add_option("--base", shape.base, "base word as JSON, e.g. [[1,0]]");
    sub->add_option("--max-degree", shape.max_degree, "truncation degree (default: until empty)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of complexes of words in general position", "wordhom"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.jobs, "worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--max-basis", cfg.max_basis, "basis size limit (also WORDHOM_MAX_BASIS)");
  app.add_option("--max-generators", cfg.max_generators, "bar generators allowed per degree");
  app.add_option("--time-budget", cfg.time_budget, "seconds, checked between stages (0 = none)");

  std::function<int()> action;
  ComplexArgs shape;

  auto* hom = app.add_subcommand("homology", "homology table of a word complex");
  hom->require_subcommand(1);
  auto* dump = app.add_subcommand("dump", "bases and boundary matrices of a word complex as JSON");
  dump->require_subcommand(1);
  for (const std::string kind : {"inj", "full", "gp"}) {
    auto* h = hom->add_subcommand(kind, kind == "inj" ? "injective words" : kind == "full" ? "all words" : "words in general position");
    add_complex_options(h, shape, kind);
    h->callback([&, kind] { action = [&, kind] { return cmd_homology(kind, shape, cfg, out); }; });
    auto* d = dump->add_subcommand(kind, "");
    add_complex_options(d, shape, kind);
    d->callback([&, kind] { action = [&, kind] { return cmd_dump(kind, shape, cfg, out); }; });
  }

  FillArgs fill_args;
  auto* fill = app.add_subcommand("fill", "fill a cycle and emit a certificate");
  fill->add_option("--input", fill_args.input, "chain JSON file, or - for stdin")->required();
  fill->add_flag("--check", fill_args.check, "validate a certificate instead");
  fill->add_option("--base", fill_args.base, "base word as JSON (overrides the input's)");
  fill->add_option("--order", fill_args.order, "known |G| or lower bound");
  fill->add_flag("--allow-out-of-range", fill_args.allow_out_of_range, "attempt cycles outside the vanishing range");
  fill->callback([&] { action = [&] { return cmd_fill(fill_args, cfg, out); }; });

  std::size_t max_n = 8;
  auto* order = app.add_subcommand("gp-order", "|G|: length of a shortest blocking sequence");
  order->require_subcommand(0, 1);
  order->add_option("--p", shape.p, "prime");
  order->add_option("--dim", shape.dim, "dimension");
  order->add_option("--max-n", max_n, "longest sequence searched");
  auto* order_inj = order->add_subcommand("inj", "injective relation");
  order_inj->add_option("--m", shape.m, "number of letters")->required();
  order_inj->add_option("--max-n", max_n, "longest sequence searched");
  order->callback([&] { action = [&] { return cmd_gp_order(shape, max_n, cfg, out); }; });

  std::size_t samples = 1000;
  auto* axioms = app.add_subcommand("axioms", "randomized check of the general-position axioms");
  axioms->require_subcommand(0, 1);
  axioms->add_option("--p", shape.p, "prime");
  axioms->add_option("--dim", shape.dim, "dimension");
  axioms->add_option("--samples", samples, "number of triples");
  axioms->add_option("--seed", cfg.seed, "random seed");
  auto* axioms_inj = axioms->add_subcommand("inj", "injective relation");
  axioms_inj->add_option("--m", shape.m, "number of letters")->required();
  axioms_inj->add_option("--samples", samples, "number of triples");
  axioms_inj->add_option("--seed", cfg.seed, "random seed");
  axioms->callback([&] { action = [&] { return cmd_axioms(shape, samples, cfg, out); }; });

  int n = 0;
  int max_degree = 2;
  bool allow_large = false;
  auto* nak = app.add_subcommand("nakaoka", "compare H_m of consecutive symmetric groups");
  nak->add_option("--n", n, "compare S(n-1) with S(n)")->required();
  nak->add_option("--max-degree", max_degree, "largest m");
  nak->add_flag("--allow-large", allow_large, "lift the bar generator limit to 2000000");
  nak->callback([&] { action = [&] { return cmd_nakaoka(n, max_degree, allow_large, cfg, out); }; });

  int der_m = 0;
  auto* der = app.add_subcommand("derangements", "fixed-point-free permutations of m letters");
  der->add_option("--m", der_m, "number of letters")->required();
  der->callback([&] { action = [&] { return cmd_derangements(der_m, cfg, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(err, Error(ErrorCode::InvalidInput, e.what()));
    return exit_code_for(ErrorCode::InvalidInput);
  }

  try {
    if (!action) throw Error(ErrorCode::InvalidInput, "no subcommand given");
    return action();
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    report_error(err, Error(ErrorCode::ResourceLimit, "out of memory"));
    return exit_code_for(ErrorCode::ResourceLimit);
  } catch (const std::exception& e) {
    report_error(err, Error(ErrorCode::InternalInvariantBroken, e.what()));
    return exit_code_for(ErrorCode::InternalInvariantBroken);
  }
}

}  // namespace wordhom::cli
