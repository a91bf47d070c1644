// Acceptance run: one line per criterion, exit status 1 if any fails.
// `acceptance --full` adds the large hexagon compounds (minutes).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ddg/compound.hpp"
#include "ddg/constructions.hpp"
#include "ddg/error.hpp"
#include "ddg/formats.hpp"
#include "ddg/moore.hpp"

using namespace ddg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  enum { kPass, kFail, kSkip } state = kPass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = {Outcome::kFail, std::string(e.name()) + ": " + e.what()};
  } catch (const std::exception& e) {
    o = {Outcome::kFail, e.what()};
  }
  const char* tag = o.state == Outcome::kPass ? "PASS" : o.state == Outcome::kFail ? "FAIL" : "SKIP";
  if (o.state == Outcome::kFail) ++failures;
  std::printf("criterion %2d %s  %s: %s\n", id, tag, title, o.detail.c_str());
  std::fflush(stdout);
}

Outcome verdict(bool ok, std::string detail) { return {ok ? Outcome::kPass : Outcome::kFail, std::move(detail)}; }

struct Built {
  NamedCompound id;
  Construction c;
  double seconds;
};

std::vector<Built> compounds;       // certified during this run
std::vector<Certificate> certified;  // every certificate issued during this run

const Built& build(NamedCompound id, const ConstructOptions& options = {}) {
  const auto t = Clock::now();
  Construction c = construct_named(id, options);
  if (c.certificate) certified.push_back(*c.certificate);
  compounds.push_back({id, std::move(c), seconds_since(t)});
  return compounds.back();
}

Outcome named_criterion(NamedCompound id, std::size_t order, std::size_t degree, std::uint32_t diam, double limit) {
  const Built& b = build(id);
  const Certificate& c = *b.c.certificate;
  const bool ok = c.order == order && c.max_degree == degree && c.diameter == diam &&
                  c.diameter_method == DiameterMode::kExact && b.seconds < limit;
  return verdict(ok, fmt("order %zu, max degree %zu, exact diameter %u, seed %llu, %.2f s (limit %.0f s)", c.order,
                         c.max_degree, c.diameter, static_cast<unsigned long long>(b.c.plan.seed), b.seconds, limit));
}

Outcome moore_builders() {
  struct Case {
    MooreSpec spec;
    std::size_t order;
  };
  const std::vector<Case> cases{
      {{MooreFamily::kPlane, 2}, 14},       {{MooreFamily::kPlane, 3}, 26},      {{MooreFamily::kPlane, 4}, 42},
      {{MooreFamily::kQuadrangle, 2}, 30},  {{MooreFamily::kQuadrangle, 3}, 80}, {{MooreFamily::kQuadrangle, 4}, 170},
      {{MooreFamily::kHexagon, 2}, 126},    {{MooreFamily::kHexagon, 3}, 728},   {{MooreFamily::kHexagon, 4}, 2730},
      {{MooreFamily::kHexagon, 5}, 7812}};
  const auto t = Clock::now();
  std::string bad;
  for (const Case& k : cases) {
    const Graph g = build_moore(k.spec);
    const Certificate c = certify(g);
    certified.push_back(c);
    const std::uint32_t d = k.spec.diameter();
    if (c.order != k.order || c.min_degree != k.spec.q + 1 || c.max_degree != k.spec.q + 1 || c.girth != 2 * d ||
        c.diameter != d || c.diameter_method != DiameterMode::kExact) {
      bad += " " + to_string(k.spec.family) + std::to_string(k.spec.q);
    }
  }
  const double s = seconds_since(t);
  if (!bad.empty()) return {Outcome::kFail, "wrong certificate for" + bad};
  return verdict(s < 60, fmt("P2-4, Q2-4, H2-5 regular with girth 2D and exact diameter D, %.2f s (limit 60 s)", s));
}

Outcome large_hexagons(bool full) {
  if (!full) return {Outcome::kSkip, "nightly tier, run `acceptance --full`"};
  std::string detail;
  bool ok = true;
  {
    // the base graphs above 10 000 vertices are only checked structurally
    // during construction; give the smallest one the full treatment here
    const auto t = Clock::now();
    const Certificate c = validate_moore(build_Hq(7), 7, 6);
    detail += fmt("H7 base exact %.0f s; ", seconds_since(t));
    ok = ok && c.diameter == 6;
  }
  for (NamedCompound id : {NamedCompound::kH7K6, NamedCompound::kH8K6, NamedCompound::kH9K6, NamedCompound::kH11K6}) {
    const CompoundRecipe& r = recipe(id);
    const Built& b = build(id);
    const Certificate& c = *b.c.certificate;
    const bool row = c.order == r.table_order && c.max_degree == r.degree() && c.diameter == 6 &&
                     c.diameter_lower == c.diameter_upper && c.bfs_runs <= 10'000;
    ok = ok && row;
    detail += fmt("%s %zu deg %zu diam %u (%s, %llu BFS, %.0f s)%s; ", to_string(id).c_str(), c.order, c.max_degree,
                  c.diameter, to_string(c.diameter_method).c_str(), static_cast<unsigned long long>(c.bfs_runs),
                  b.seconds, row ? "" : " FAILED");
  }
  ConstructOptions o;
  o.certify_diameter = false;
  const auto t = Clock::now();
  Construction h13 = construct_named(NamedCompound::kH13K7, o);
  const CompoundRecipe& r = recipe(NamedCompound::kH13K7);
  const bool order_ok = h13.graph.order() == r.order() && degree_stats(h13.graph).max == r.degree();
  ok = ok && order_ok;
  detail += fmt("H13K7 %zu (published %llu, flagged) in %.0f s", h13.graph.order(),
                static_cast<unsigned long long>(r.table_order), seconds_since(t));
  try {
    const Certificate c = certify_compound(h13.graph, h13.base, 6, h13.plan);
    certified.push_back(c);
    detail += fmt(", diameter %u", c.diameter);
  } catch (const Error& e) {
    detail += std::string(", diameter best-effort: ") + std::string(e.name());
  }
  return verdict(ok, detail);
}

Outcome slot_identity() {
  std::string detail;
  bool ok = true;
  for (NamedCompound id : {NamedCompound::kH5K4, NamedCompound::kH7K6, NamedCompound::kH8K6, NamedCompound::kH9K6,
                           NamedCompound::kH11K6, NamedCompound::kH13K7}) {
    const CompoundRecipe& r = recipe(id);
    const SlotLedger s = slot_balance(r.degree(), r.h, r.ranges, true);
    ok = ok && s.capacity == s.demand && s.surplus == 0;
    detail += fmt("%s %u=%u ", to_string(id).c_str(), s.capacity, s.demand);
  }
  return verdict(ok, detail);
}

Outcome disjoint_paths() {
  const Graph g = build_Hq(2);
  std::mt19937_64 rng(2);
  int pairs = 0;
  int wrong = 0;
  while (pairs < 64) {
    const Vertex u = rng() % g.order();
    const Vertex v = rng() % g.order();
    if (bfs_distances(g, u)[v] != 6) continue;
    ++pairs;
    wrong += disjoint_shortest_paths(g, u, v) != 3;
  }
  return verdict(wrong == 0, fmt("%d sampled pairs at distance 6 in H2, %d without exactly 3 disjoint paths", pairs, wrong));
}

Outcome obligations() {
  std::string detail;
  bool ok = true;
  for (const Built& b : compounds) {
    const ProofObligations o = measure_proof_obligations(b.c.graph, b.c.plan);
    const bool row = o.max_intra_block <= 3 && o.max_cross_block <= 5;
    ok = ok && row;
    detail += fmt("%s intra %u/%zu cross %u/%zu%s; ", to_string(b.id).c_str(), o.max_intra_block, o.intra_pairs,
                  o.max_cross_block, o.cross_pairs, row ? "" : " FAILED");
  }
  return verdict(ok && !compounds.empty(), detail + "(max distance/pairs)");
}

Outcome properties() {
  // field axioms, exhaustive
  std::size_t triples = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field f = Field::make(q);
    const auto el = f.elements();
    for (auto a : el) {
      if (a != f.zero() && f.mul(a, f.inv(a)) != f.one()) return {Outcome::kFail, fmt("inverse fails in GF(%u)", q)};
      if (f.add(a, f.neg(a)) != f.zero()) return {Outcome::kFail, fmt("negation fails in GF(%u)", q)};
      for (auto b : el) {
        if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a))
          return {Outcome::kFail, fmt("commutativity fails in GF(%u)", q)};
        for (auto c : el) {
          ++triples;
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
              f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
            return {Outcome::kFail, fmt("axiom fails in GF(%u)", q)};
        }
      }
    }
  }
  // Moore bound for everything certified so far
  for (const Certificate& c : certified) {
    if (c.order > moore_bound(c.max_degree, c.diameter) ||
        (c.bipartite && c.order > bipartite_moore_bound(c.max_degree, c.diameter)))
      return {Outcome::kFail, fmt("order %zu above the Moore bound", c.order)};
  }
  // round trips
  std::vector<const Graph*> graphs;
  const Graph h2 = build_Hq(2);
  graphs.push_back(&h2);
  for (const Built& b : compounds)
    if (b.c.graph.order() <= kGraph6MaxOrder) graphs.push_back(&b.c.graph);
  for (const Graph* g : graphs)
    for (auto f : {GraphFormat::kEdgeList, GraphFormat::kDimacs, GraphFormat::kGraph6})
      if (!import_graph(export_graph(*g, f), f).same_adjacency(*g))
        return {Outcome::kFail, "round trip failed for " + to_string(f)};
  // determinism
  for (NamedCompound id : {NamedCompound::kQ4K3, NamedCompound::kH3K3, NamedCompound::kH5K4}) {
    ConstructOptions o;
    o.first_seed = 1;
    const std::string a = export_graph(construct_named(id, o).graph, GraphFormat::kGraph6);
    const std::string b = export_graph(construct_named(id, o).graph, GraphFormat::kGraph6);
    if (a != b) return {Outcome::kFail, "construction not deterministic for " + to_string(id)};
  }
  return {Outcome::kPass, fmt("%zu field triples, Moore bound on %zu certificates, 3 formats x %zu graphs, "
                              "same-seed bytes for 3 compounds",
                              triples, certified.size(), graphs.size())};
}

}  // namespace

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
  const auto t = Clock::now();
  report(1, "Moore builders", moore_builders);
  report(2, "Q4(K3)", [] { return named_criterion(NamedCompound::kQ4K3, 186, 5, 4, 5); });
  report(3, "H3(K3)", [] { return named_criterion(NamedCompound::kH3K3, 740, 4, 6, 10); });
  report(4, "H4(K4)", [] { return named_criterion(NamedCompound::kH4K4, 2754, 5, 6, 60); });
  report(5, "H5(K4)", [] { return named_criterion(NamedCompound::kH5K4, 7860, 6, 6, 600); });
  report(6, "large hexagon compounds", [&] { return large_hexagons(full); });
  report(7, "slot balance identity", slot_identity);
  report(8, "disjoint shortest paths", disjoint_paths);
  report(9, "proof obligations", obligations);
  report(10, "property suites", properties);
  std::printf("%s, %.1f s\n", failures ? "FAILED" : "all criteria passed", seconds_since(t));
  return failures ? 1 : 0;
}
