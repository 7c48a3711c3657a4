#include "pgroup/io.hpp"

#include <fstream>
#include <sstream>

namespace pgroup {

namespace {

[[noreturn]] void bad(const std::string& what) { throw AlgebraError(Errc::invalid_input, what); }

std::vector<unsigned> word_from_json(const json& w, unsigned rank, const std::string& where) {
  if (!w.is_array() || w.size() > rank) bad(where + ": word must be an array of at most rank exponents");
  std::vector<unsigned> out(rank, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_number_unsigned() && !(w[i].is_number_integer() && w[i].get<long long>() >= 0))
      bad(where + ": exponents must be non-negative integers");
    out[i] = w[i].get<unsigned>();
  }
  return out;
}

unsigned parse_index(const std::string& s, unsigned rank, const std::string& where) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    bad(where + ": bad generator index '" + s + "'");
  }
  if (used != s.size() || v < 1 || v > rank) bad(where + ": generator index out of range '" + s + "'");
  return static_cast<unsigned>(v - 1);
}

CayleyTable table_from_json(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) bad(what + " must be an order x order array");
  CayleyTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad(what + " must be an order x order array");
    t[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!j[i][k].is_number_integer()) bad(what + " entries must be integers");
      const auto v = j[i][k].get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n) bad(what + " entry out of range");
      t[i][k] = static_cast<Elem>(v);
    }
  }
  return t;
}

std::size_t order_field(const json& j) {
  if (!j.contains("order") || !j["order"].is_number_integer() || j["order"].get<long long>() < 1)
    bad("'order' must be a positive integer");
  return j["order"].get<std::size_t>();
}

json table_to_json(const CayleyTable& t) {
  json out = json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

bool nonzero(const std::vector<unsigned>& w) {
  for (unsigned e : w)
    if (e) return true;
  return false;
}

}  // namespace

PcPresentation pc_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != "pc") bad("expected an object with \"format\":\"pc\"");
  if (!j.contains("p") || !j["p"].is_number_unsigned()) bad("pc: 'p' must be a positive integer");
  if (!j.contains("rank") || !j["rank"].is_number_unsigned()) bad("pc: 'rank' must be a non-negative integer");
  PcPresentation pcp;
  pcp.p = j["p"].get<unsigned>();
  pcp.rank = j["rank"].get<unsigned>();
  if (j.contains("powers")) {
    if (!j["powers"].is_object()) bad("pc: 'powers' must be an object");
    for (const auto& [k, w] : j["powers"].items()) {
      const unsigned i = parse_index(k, pcp.rank, "pc powers");
      pcp.powers[i] = word_from_json(w, pcp.rank, "pc powers " + k);
    }
  }
  if (j.contains("commutators")) {
    if (!j["commutators"].is_object()) bad("pc: 'commutators' must be an object");
    for (const auto& [k, w] : j["commutators"].items()) {
      const auto comma = k.find(',');
      if (comma == std::string::npos) bad("pc: commutator key must be \"j,i\"");
      const unsigned jj = parse_index(k.substr(0, comma), pcp.rank, "pc commutators");
      const unsigned ii = parse_index(k.substr(comma + 1), pcp.rank, "pc commutators");
      if (jj <= ii) bad("pc: commutator key \"j,i\" needs j > i");
      pcp.commutators[{jj, ii}] = word_from_json(w, pcp.rank, "pc commutators " + k);
    }
  }
  return pcp;
}

json pc_to_json(const PcPresentation& pcp) {
  json powers = json::object();
  for (const auto& [i, w] : pcp.powers)
    if (nonzero(w)) powers[std::to_string(i + 1)] = w;
  json comms = json::object();
  for (const auto& [ji, w] : pcp.commutators)
    if (nonzero(w)) comms[std::to_string(ji.first + 1) + "," + std::to_string(ji.second + 1)] = w;
  return {{"format", "pc"}, {"p", pcp.p}, {"rank", pcp.rank}, {"powers", powers}, {"commutators", comms}};
}

FiniteGroup group_from_json(const json& j, const BuildOptions& opts) {
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) bad("group file needs a 'format' field");
  const std::string fmt = j["format"];
  if (fmt == "pc") return from_pc_presentation(pc_from_json(j), opts);
  if (fmt == "cayley") {
    const std::size_t n = order_field(j);
    if (n > opts.max_order) throw AlgebraError(Errc::too_large, "order " + std::to_string(n) + " exceeds the cap");
    if (!j.contains("mul")) bad("cayley: missing 'mul'");
    return from_cayley_table(table_from_json(j["mul"], n, "cayley 'mul'"), opts);
  }
  bad("unknown group format '" + fmt + "'");
}

json cayley_to_json(const FiniteGroup& g) {
  return {{"format", "cayley"}, {"order", g.order()}, {"mul", table_to_json(g.cayley_table())}};
}

FiniteRing ring_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != "ring") bad("expected an object with \"format\":\"ring\"");
  const std::size_t n = order_field(j);
  if (!j.contains("add") || !j.contains("mul")) bad("ring: missing 'add' or 'mul'");
  return make_ring(table_from_json(j["add"], n, "ring 'add'"), table_from_json(j["mul"], n, "ring 'mul'"));
}

json ring_to_json(const FiniteRing& r) {
  return {{"format", "ring"},
          {"order", r.order()},
          {"add", table_to_json(r.add_table())},
          {"mul", table_to_json(r.mul_table())}};
}

json profile_to_json(const StructureProfile& prof) {
  std::size_t order = 1;
  for (unsigned i = 0; i < prof.n; ++i) order *= prof.p;
  return {{"p", prof.p},
          {"n", prof.n},
          {"order", order},
          {"class", prof.nilpotency_class},
          {"coclass", prof.coclass},
          {"dG", prof.d},
          {"exponent", prof.exponent},
          {"r", prof.r},
          {"s", prof.s},
          {"is_powerful", prof.is_powerful},
          {"is_purely_nonabelian", std::string(to_string(prof.is_purely_nonabelian))},
          {"is_strongly_frattinian", prof.is_strongly_frattinian},
          {"cgphi_in_phi", prof.cgphi_in_phi}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

Subgroup parse_module_spec(const FiniteGroup& g, const std::string& spec) {
  if (spec == "center") return center(g);
  if (spec == "omega1-center") return omega(g, center(g), 1);
  std::string s = spec;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<Elem> gens;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      bad("module spec: expected 'center', 'omega1-center' or element indices, got '" + spec + "'");
    }
    if (used != tok.size() || v >= g.order()) bad("module spec: element index out of range '" + tok + "'");
    gens.push_back(static_cast<Elem>(v));
  }
  if (gens.empty()) bad("module spec is empty");
  return subgroup_closure(g, gens);
}

}  // namespace pgroup
