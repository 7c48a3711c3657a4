// Seeded search for 2-generator p-groups by central extension.
//
// Starting from C_p x C_p, each level appends a central generator of order p
// and gives every power and commutator relation a random tail in it. Tails
// that leave the presentation inconsistent, or that raise d(G), are dropped.
// Groups are deduplicated by an invariant fingerprint, so distinct
// isomorphism types can occasionally be merged; that only loses candidates.
//
// Usage: catalog_search [p] [max_rank] [samples_per_group] [seed]
//
// Prints every group at ranks >= 5 of coclass 2 with the outcome of the
// coclass 2 check.

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pgroup/berkovich.hpp"
#include "pgroup/fullness.hpp"
#include "pgroup/structure.hpp"

using namespace pgroup;

namespace {

std::string fingerprint(const FiniteGroup& g) {
  const auto prof = structure_profile(g);
  std::string key = std::to_string(prof.nilpotency_class) + "/" + std::to_string(prof.exponent) + "/" +
                    std::to_string(prof.is_powerful) + "/" + std::to_string(prof.is_strongly_frattinian) + "/" +
                    std::to_string(prof.cgphi_in_phi);
  for (const auto& s : upper_central_series(g)) key += "z" + std::to_string(s.order());
  for (const auto& s : lower_central_series(g)) key += "g" + std::to_string(s.order());
  for (auto q : abelian_invariants(g, center(g))) key += "c" + std::to_string(q);
  // (element order, centraliser order) census
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> census;
  for (Elem x = 0; x < g.order(); ++x) ++census[{g.element_order(x), centralizer(g, x).order()}];
  for (const auto& [k, v] : census)
    key += "," + std::to_string(k.first) + ":" + std::to_string(k.second) + "=" + std::to_string(v);
  return key;
}

std::string word_json(const std::vector<unsigned>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

std::string presentation_json(const PcPresentation& pcp) {
  std::string s = "{\"format\":\"pc\",\"p\":" + std::to_string(pcp.p) + ",\"rank\":" + std::to_string(pcp.rank) +
                  ",\"powers\":{";
  bool first = true;
  for (const auto& [i, w] : pcp.powers) {
    bool any = false;
    for (auto e : w) any = any || e;
    if (!any) continue;
    s += std::string(first ? "" : ",") + "\"" + std::to_string(i + 1) + "\":" + word_json(w);
    first = false;
  }
  s += "},\"commutators\":{";
  first = true;
  for (const auto& [ji, w] : pcp.commutators) {
    bool any = false;
    for (auto e : w) any = any || e;
    if (!any) continue;
    s += std::string(first ? "" : ",") + "\"" + std::to_string(ji.first + 1) + "," + std::to_string(ji.second + 1) +
         "\":" + word_json(w);
    first = false;
  }
  return s + "}}";
}

void report(const PcPresentation& pcp, const FiniteGroup& g) {
  const auto prof = structure_profile(g);
  if (prof.coclass != 2) return;
  const Theorem51Verdict v = verify_theorem51(g);
  const auto zs = upper_central_series(g);
  std::printf("order %zu |Z| %zu |Z2| %zu class %zu exp %zu powerful %d sf %d cgphi %d branch %s witness %d der %zu inner %zu exact %d full %d findings %zu\n",
              g.order(), zs[1].order(), zs[2].order(), prof.nilpotency_class, prof.exponent, prof.is_powerful, prof.is_strongly_frattinian,
              prof.cgphi_in_phi, v.branch ? std::string(to_string(*v.branch)).c_str() : "-", v.witness.has_value(),
              v.der_g_h1, v.inner_part, v.exact, v.full_all_maximals, v.findings.size());
  std::printf("  %s\n", presentation_json(pcp).c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned p = argc > 1 ? std::stoul(argv[1]) : 3;
  const unsigned max_rank = argc > 2 ? std::stoul(argv[2]) : 5;
  const std::size_t samples = argc > 3 ? std::stoul(argv[3]) : 4000;
  const unsigned seed = argc > 4 ? std::stoul(argv[4]) : 1;
  std::mt19937_64 rng(seed);

  PcPresentation base;
  base.p = p;
  base.rank = 2;
  std::vector<PcPresentation> level{base};
  for (unsigned rank = 3; rank <= max_rank; ++rank) {
    std::vector<PcPresentation> next;
    std::set<std::string> seen;
    for (const auto& parent : level) {
      // relation slots: powers 0..r-1, then commutators (j, i)
      std::vector<std::pair<int, std::pair<unsigned, unsigned>>> slots;
      for (unsigned i = 0; i + 1 < rank; ++i) slots.push_back({0, {i, 0}});
      for (unsigned j = 1; j + 1 < rank; ++j)
        for (unsigned i = 0; i < j; ++i) slots.push_back({1, {j, i}});
      std::size_t total = 1;
      bool exhaustive = true;
      for (std::size_t k = 0; k < slots.size() && exhaustive; ++k) {
        total *= p;
        exhaustive = total <= samples;
      }
      const std::size_t runs = exhaustive ? total : samples;
      for (std::size_t r = 0; r < runs; ++r) {
        std::vector<unsigned> tail(slots.size());
        std::size_t code = r;
        bool any = false;
        for (auto& t : tail) {
          t = exhaustive ? static_cast<unsigned>(code % p) : static_cast<unsigned>(rng() % p);
          code /= p;
          any = any || t;
        }
        if (!any) continue;
        PcPresentation child;
        child.p = p;
        child.rank = rank;
        for (unsigned i = 0; i + 1 < rank; ++i) {
          auto it = parent.powers.find(i);
          child.powers[i] = it == parent.powers.end() ? std::vector<unsigned>(rank - 1, 0) : it->second;
          child.powers[i].resize(rank, 0);
        }
        for (unsigned j = 1; j + 1 < rank; ++j)
          for (unsigned i = 0; i < j; ++i) {
            auto it = parent.commutators.find({j, i});
            auto& w = child.commutators[{j, i}];
            w = it == parent.commutators.end() ? std::vector<unsigned>(rank - 1, 0) : it->second;
            w.resize(rank, 0);
          }
        for (std::size_t k = 0; k < slots.size(); ++k) {
          auto& w = slots[k].first == 0 ? child.powers[slots[k].second.first] : child.commutators[slots[k].second];
          w[rank - 1] = tail[k];
        }
        if (!is_consistent(child)) continue;
        const FiniteGroup g = from_pc_presentation(child);
        if (generator_rank(g) != 2) continue;
        if (!seen.insert(fingerprint(g)).second) continue;
        next.push_back(child);
        if (rank >= 5) report(child, g);
      }
    }
    std::fprintf(stderr, "rank %u: %zu groups\n", rank, next.size());
    level = std::move(next);
  }
}
