#include "pgroup/catalog.hpp"

#include <set>

namespace pgroup {

namespace {

// Expected profiles are the regression baseline recorded from this
// implementation; tests compare them against fresh computations.
constexpr const char* kCatalog = R"json([
{"id":"c3","description":"cyclic group of order 3",
 "presentation":{"format":"pc","p":3,"rank":1},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":0,"dG":1,"exponent":3,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":1,"order":3,"p":3,"r":1,"s":1}},
{"id":"c9","description":"cyclic group of order 9",
 "presentation":{"format":"pc","p":3,"rank":2,"powers":{"1":[0,1]}},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":1,"dG":1,"exponent":9,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":2,"order":9,"p":3,"r":2,"s":2}},
{"id":"c3xc3","description":"elementary abelian of order 9",
 "presentation":{"format":"pc","p":3,"rank":2},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":1,"dG":2,"exponent":3,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":2,"order":9,"p":3,"r":1,"s":1}},
{"id":"c3xc3xc3","description":"elementary abelian of order 27",
 "presentation":{"format":"pc","p":3,"rank":3},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":2,"dG":3,"exponent":3,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":3,"order":27,"p":3,"r":1,"s":1}},
{"id":"heis27","description":"Heisenberg group of order 27, exponent 3",
 "presentation":{"format":"pc","p":3,"rank":3,"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":3,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":27,"p":3,"r":1,"s":1}},
{"id":"m27","description":"extraspecial group of order 27, exponent 9",
 "presentation":{"format":"pc","p":3,"rank":3,"powers":{"1":[0,0,1]},"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":9,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":27,"p":3,"r":1,"s":1}},
{"id":"c3xheis27","description":"C3 x Heisenberg 27",
 "presentation":{"format":"pc","p":3,"rank":4,"commutators":{"2,1":[0,0,1,0]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":3,"exponent":3,"is_powerful":false,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":1,"s":1}},
{"id":"c3xm27","description":"C3 x extraspecial 27 of exponent 9",
 "presentation":{"format":"pc","p":3,"rank":4,"powers":{"1":[0,0,1,0]},"commutators":{"2,1":[0,0,1,0]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":3,"exponent":9,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":1,"s":1}},
{"id":"c9sdc9","description":"C9 semidirect C9, class 2",
 "presentation":{"format":"pc","p":3,"rank":4,"powers":{"1":[0,0,1,0],"2":[0,0,0,1]},"commutators":{"2,1":[0,0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":2,"exponent":9,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":2,"s":1}},
{"id":"m81","description":"C27 semidirect C3, class 2",
 "presentation":{"format":"pc","p":3,"rank":4,"powers":{"1":[0,0,1,0],"3":[0,0,0,1]},"commutators":{"2,1":[0,0,0,2]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":2,"exponent":27,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":2,"s":2}},
{"id":"g81_c9c3sdc3","description":"(C9 x C3) semidirect C3, class 2",
 "presentation":{"format":"pc","p":3,"rank":4,"powers":{"1":[0,0,1,0]},"commutators":{"2,1":[0,0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":2,"exponent":9,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":2,"s":1}},
{"id":"c9oheis27","description":"central product of C9 and Heisenberg 27",
 "presentation":{"format":"pc","p":3,"rank":4,"powers":{"3":[0,0,0,1]},"commutators":{"2,1":[0,0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":2,"dG":3,"exponent":9,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":4,"order":81,"p":3,"r":1,"s":2}},
{"id":"g243a","description":"order 243, coclass 2, class 3, centre of order 9, exponent 9",
 "presentation":{"format":"pc","p":3,"rank":5,"powers":{"1":[0,0,1,0,0]},"commutators":{"2,1":[0,0,0,1,0],"4,1":[0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":3,"coclass":2,"dG":2,"exponent":9,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":5,"order":243,"p":3,"r":2,"s":1}},
{"id":"g243b","description":"order 243, coclass 2, class 3, centre of order 9, exponent 27",
 "presentation":{"format":"pc","p":3,"rank":5,"powers":{"1":[0,0,1,0,0],"3":[0,0,0,0,1]},"commutators":{"2,1":[0,0,0,1,0],"4,1":[0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":3,"coclass":2,"dG":2,"exponent":27,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":5,"order":243,"p":3,"r":2,"s":2}},
{"id":"g243c","description":"order 243, coclass 2, class 3, strongly frattinian, g1 of order 3",
 "presentation":{"format":"pc","p":3,"rank":5,"commutators":{"2,1":[0,0,1,0,0],"3,1":[0,0,0,1,0],"3,2":[0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":true,"class":3,"coclass":2,"dG":2,"exponent":9,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":5,"order":243,"p":3,"r":1,"s":1}},
{"id":"g243d","description":"order 243, coclass 2, class 3, strongly frattinian, g1 of order 9",
 "presentation":{"format":"pc","p":3,"rank":5,"powers":{"1":[0,0,0,0,1]},"commutators":{"2,1":[0,0,1,0,0],"3,1":[0,0,0,1,0],"3,2":[0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":true,"class":3,"coclass":2,"dG":2,"exponent":9,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":5,"order":243,"p":3,"r":1,"s":1}},
{"id":"g243pow","description":"order 243, coclass 2, 2-generated, cyclic centre, powerful",
 "presentation":{"format":"pc","p":3,"rank":5,"powers":{"1":[0,0,1,0,0],"2":[0,0,0,1,0],"4":[0,0,0,0,1]},"commutators":{"2,1":[0,0,0,1,0],"3,2":[0,0,0,0,2],"4,1":[0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":true,"class":3,"coclass":2,"dG":2,"exponent":27,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":5,"order":243,"p":3,"r":2,"s":1}},
{"id":"g729a","description":"order 729, coclass 2, 2-generated, cyclic centre, class 4",
 "presentation":{"format":"pc","p":3,"rank":6,"powers":{"1":[0,0,1,0,0,2],"3":[0,0,0,0,0,1]},"commutators":{"2,1":[0,0,0,1,0,0],"3,2":[0,0,0,0,0,2],"4,1":[0,0,0,0,1,2],"5,1":[0,0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":true,"class":4,"coclass":2,"dG":2,"exponent":27,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":6,"order":729,"p":3,"r":2,"s":1}},
{"id":"g729b","description":"order 729, coclass 2, 2-generated, cyclic centre, class 4",
 "presentation":{"format":"pc","p":3,"rank":6,"powers":{"1":[0,0,1,0,0,2],"2":[0,0,0,0,0,2],"3":[0,0,0,0,0,2]},"commutators":{"2,1":[0,0,0,1,0,1],"3,2":[0,0,0,0,0,2],"4,1":[0,0,0,0,1,2],"4,2":[0,0,0,0,0,1],"5,1":[0,0,0,0,0,1]}},
 "expected":{"cgphi_in_phi":true,"class":4,"coclass":2,"dG":2,"exponent":27,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":6,"order":729,"p":3,"r":2,"s":1}},
{"id":"g729c","description":"order 729, coclass 2, class 4, cyclic centre, zeta_2 elementary of order 27",
 "presentation":{"format":"pc","p":3,"rank":6,"powers":{"1":[0,0,1,0,0,0],"2":[0,0,0,0,0,2]},"commutators":{"2,1":[0,0,0,1,0,1],"3,2":[0,0,0,0,0,1],"4,1":[0,0,0,0,1,0],"4,2":[0,0,0,0,0,2],"5,1":[0,0,0,0,0,2]}},
 "expected":{"cgphi_in_phi":true,"class":4,"coclass":2,"dG":2,"exponent":9,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":6,"order":729,"p":3,"r":2,"s":1}},
{"id":"g729d","description":"order 729, coclass 2, 2-generated, cyclic centre, class 4",
 "presentation":{"format":"pc","p":3,"rank":6,"powers":{"1":[0,0,1,0,0,2],"2":[0,0,0,0,1,0],"3":[0,0,0,0,0,2],"4":[0,0,0,0,0,2]},"commutators":{"2,1":[0,0,0,1,0,1],"3,2":[0,0,0,0,0,2],"4,1":[0,0,0,0,1,0],"4,2":[0,0,0,0,0,1],"5,1":[0,0,0,0,0,2]}},
 "expected":{"cgphi_in_phi":true,"class":4,"coclass":2,"dG":2,"exponent":27,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":6,"order":729,"p":3,"r":2,"s":1}},
{"id":"g729e","description":"order 729, coclass 2, 2-generated, cyclic centre, class 4",
 "presentation":{"format":"pc","p":3,"rank":6,"powers":{"1":[0,0,1,0,0,0],"2":[0,0,0,0,1,1],"3":[0,0,0,0,0,1],"4":[0,0,0,0,0,2]},"commutators":{"2,1":[0,0,0,1,0,2],"3,2":[0,0,0,0,0,2],"4,1":[0,0,0,0,1,2],"4,2":[0,0,0,0,0,1],"5,1":[0,0,0,0,0,2]}},
 "expected":{"cgphi_in_phi":true,"class":4,"coclass":2,"dG":2,"exponent":27,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":true,"n":6,"order":729,"p":3,"r":2,"s":1}},
{"id":"c5","description":"cyclic group of order 5",
 "presentation":{"format":"pc","p":5,"rank":1},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":0,"dG":1,"exponent":5,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":1,"order":5,"p":5,"r":1,"s":1}},
{"id":"c25","description":"cyclic group of order 25",
 "presentation":{"format":"pc","p":5,"rank":2,"powers":{"1":[0,1]}},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":1,"dG":1,"exponent":25,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":2,"order":25,"p":5,"r":2,"s":2}},
{"id":"c5xc5","description":"elementary abelian of order 25",
 "presentation":{"format":"pc","p":5,"rank":2},
 "expected":{"cgphi_in_phi":false,"class":1,"coclass":1,"dG":2,"exponent":5,"is_powerful":true,"is_purely_nonabelian":"false","is_strongly_frattinian":false,"n":2,"order":25,"p":5,"r":1,"s":1}},
{"id":"heis125","description":"Heisenberg group of order 125, exponent 5",
 "presentation":{"format":"pc","p":5,"rank":3,"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":5,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":125,"p":5,"r":1,"s":1}},
{"id":"m125","description":"extraspecial group of order 125, exponent 25",
 "presentation":{"format":"pc","p":5,"rank":3,"powers":{"1":[0,0,1]},"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":25,"is_powerful":true,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":125,"p":5,"r":1,"s":1}},
{"id":"d8","description":"dihedral group of order 8",
 "presentation":{"format":"pc","p":2,"rank":3,"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":4,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":8,"p":2,"r":1,"s":1}},
{"id":"q8","description":"quaternion group of order 8",
 "presentation":{"format":"pc","p":2,"rank":3,"powers":{"1":[0,0,1],"2":[0,0,1]},"commutators":{"2,1":[0,0,1]}},
 "expected":{"cgphi_in_phi":false,"class":2,"coclass":1,"dG":2,"exponent":4,"is_powerful":false,"is_purely_nonabelian":"true","is_strongly_frattinian":false,"n":3,"order":8,"p":2,"r":1,"s":1}}
])json";

std::vector<CatalogEntry> load() {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  for (const auto& j : json::parse(kCatalog)) {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.description = j.at("description").get<std::string>();
    e.presentation = pc_from_json(j.at("presentation"));
    e.expected = j.value("expected", json::object());
    if (!seen.insert(e.id).second) throw AlgebraError(Errc::invalid_input, "duplicate catalog id " + e.id);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& bundled_catalog() {
  static const std::vector<CatalogEntry> entries = load();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view id) {
  for (const auto& e : bundled_catalog())
    if (e.id == id) return &e;
  return nullptr;
}

FiniteGroup build_entry(const CatalogEntry& e, const BuildOptions& opts) {
  return from_pc_presentation(e.presentation, opts);
}

}  // namespace pgroup
