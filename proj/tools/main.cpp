#include "jordan/checker.hpp"
#include "jordan/functional.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

int cmd_prove(const std::string& path, const std::string& format) {
  jordan::ProofScript script;
  try {
    script = jordan::load_script(path);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 3;
  }
  auto report = jordan::replay(script);
  std::cout << (format == "json" ? jordan::to_json(report) + "\n" : jordan::to_text(report));
  if (report.failed()) return 1;
  return report.verified() ? 0 : 2;
}

struct RingArgs {
  std::string spec_path;
  std::string kind;
  int k = 2;
  std::int64_t p = 0;
  std::int64_t order = 0;
  std::vector<std::int64_t> n_values;
};

struct LawArgs {
  std::string law = "gen-centralizer";
  std::int64_t m = 1;
};

struct BoundArgs {
  std::uint64_t max_size = 0;
  std::uint64_t max_solutions = 0;
  int jobs = 1;

  jordan::Bounds bounds() const {
    jordan::Bounds b;
    if (max_size) b.element_scan = max_size;
    if (max_solutions) b.max_solutions = max_solutions;
    return b;
  }
};

// `--n` names both the order of Z_n and the law parameter; for Zn without
// --order the first occurrence is the order.
std::int64_t law_n(const RingArgs& r, bool zn_order_from_n) {
  const std::size_t skip = zn_order_from_n ? 1 : 0;
  if (r.n_values.size() > skip + 1) throw std::invalid_argument("too many --n values");
  return r.n_values.size() == skip + 1 ? r.n_values[skip] : 1;
}

jordan::LawSpec make_spec(const LawArgs& l, std::int64_t n) {
  auto law = jordan::law_from_name(l.law);
  if (!law || *law == jordan::Law::difference) throw std::invalid_argument("unknown law: " + l.law);
  if (l.m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  return {*law, l.m, n};
}

int cmd_ring(const RingArgs& ra, const LawArgs& la, const BoundArgs& ba, const std::string& format) {
  try {
    bool zn_from_n = false;
    std::optional<jordan::FinRing> ring;
    if (!ra.spec_path.empty()) {
      ring = jordan::load_ring(ra.spec_path);
    } else if (ra.kind == "Zn") {
      std::int64_t order = ra.order;
      if (order == 0) {
        if (ra.n_values.empty()) throw std::invalid_argument("Zn needs --order or --n");
        order = ra.n_values.front();
        zn_from_n = true;
      }
      ring = jordan::FinRing::Zn(order);
    } else if (ra.kind == "Mat") {
      ring = jordan::FinRing::MatRing(ra.k, ra.p);
    } else {
      throw std::invalid_argument("give --spec or --kind Zn|Mat");
    }
    const auto spec = make_spec(la, law_n(ra, zn_from_n));
    const auto report = jordan::check_theorem(*ring, spec, ba.bounds());
    if (format == "json") {
      std::cout << jordan::to_json(report) << "\n";
    } else {
      std::cout << "ring: " << report.ring << " (order " << report.order << ")\n"
                << "law: " << jordan::name_of(spec.law) << " (m,n)=(" << spec.m << "," << spec.n << ")\n"
                << "torsion factor: " << report.torsion << "\n";
      for (const auto& [name, holds] : report.hypotheses)
        std::cout << name << ": " << (holds ? "true" : "false") << "\n";
      std::cout << "solutions: " << report.count << (report.checked_every_solution ? "" : " (checked on generators)") << "\n"
                << "conclusion: " << (report.conclusion ? "holds" : "fails") << "\n"
                << "verdict: " << report.verdict << "\n";
      for (const auto& w : report.witnesses) {
        std::cout << "witness: " << jordan::to_string(*ring, w.map);
        if (!w.base.m.empty()) std::cout << " base " << jordan::to_string(*ring, w.base);
        std::cout << "\n";
      }
    }
    return report.verdict == "COUNTEREXAMPLE" ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "ring: " << e.what() << "\n";
    return 3;
  }
}

int cmd_search(const std::string& family, std::int64_t bound, const std::vector<std::int64_t>& members,
               const LawArgs& la, std::int64_t n, const BoundArgs& ba, const std::string& format) {
  try {
    jordan::Family f;
    if (family == "Zn") f.kind = jordan::Family::Kind::Zn;
    else if (family == "Mat2") f.kind = jordan::Family::Kind::Mat2;
    else f.kind = jordan::Family::Kind::Products;
    f.bound = bound;
    f.members = members;
    const auto spec = make_spec(la, n);
    const auto rows = jordan::search_family(f, spec, ba.bounds(), ba.jobs);
    std::cout << (format == "json" ? jordan::to_json(rows) + "\n" : jordan::to_text(rows));
    for (const auto& r : rows)
      if (r.verdict == "COUNTEREXAMPLE") return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "search: " << e.what() << "\n";
    return 3;
  }
}

void add_bound_options(CLI::App* cmd, BoundArgs& b) {
  cmd->add_option("--max-size", b.max_size, "Largest ring order handled");
  cmd->add_option("--max-solutions", b.max_solutions, "Largest solution set listed explicitly");
  cmd->add_option("--jobs", b.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Replay proof scripts and check functional identities on finite rings"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json"});

  auto* prove = app.add_subcommand("prove", "Replay a proof script");
  std::string script_path;
  prove->add_option("script", script_path, "Proof script")->required();
  prove->add_option("--format", format)->check(formats);

  auto* ring = app.add_subcommand("ring", "Check a theorem on one finite ring");
  RingArgs ra;
  LawArgs la;
  BoundArgs ba;
  ring->add_option("--spec", ra.spec_path, "Ring JSON file");
  ring->add_option("--kind", ra.kind)->check(CLI::IsMember({"Zn", "Mat"}));
  ring->add_option("--k", ra.k, "Matrix size");
  ring->add_option("--p", ra.p, "Matrix coefficient modulus");
  ring->add_option("--order", ra.order, "Order of Z_n");
  ring->add_option("--n", ra.n_values, "Law parameter n (for --kind Zn without --order, first the order)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ring->add_option("--law", la.law);
  ring->add_option("--m", la.m);
  ring->add_option("--format", format)->check(formats);
  add_bound_options(ring, ba);

  auto* search = app.add_subcommand("search", "Check a theorem across a family of rings");
  std::string family = "Zn";
  std::int64_t bound = 0, search_n = 1;
  std::vector<std::int64_t> members;
  search->add_option("--family", family)->check(CLI::IsMember({"Zn", "Mat2", "products"}));
  search->add_option("--bound", bound, "Largest n (Zn) or prime");
  search->add_option("--members", members, "Explicit n or primes")->delimiter(',');
  search->add_option("--law", la.law);
  search->add_option("--m", la.m);
  search->add_option("--n", search_n);
  search->add_option("--format", format)->check(formats);
  add_bound_options(search, ba);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  if (*prove) return cmd_prove(script_path, format);
  if (*ring) return cmd_ring(ra, la, ba, format);
  if (*search) return cmd_search(family, bound, members, la, search_n, ba, format);
  return 3;
}
