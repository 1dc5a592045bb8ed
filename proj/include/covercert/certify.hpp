#ifndef COVERCERT_CERTIFY_HPP
#define COVERCERT_CERTIFY_HPP

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "covercert/corpus.hpp"
#include "covercert/covering.hpp"
#include "covercert/group_presentation.hpp"
#include "covercert/homology.hpp"
#include "covercert/nerve_map.hpp"

namespace covercert {

inline constexpr const char* kToolVersion = "covercert 1.0.0";

struct CertifyOptions {
  int max_subdiv = 8;
  bool compute_nerve_map = true;
  std::optional<std::vector<int>> degrees;  // restrict reported vanishing degrees
};

struct VanishingEntry {
  int degree = 0;
  std::string rule;  // NerveHomologyZero or MultiplicityBound
  std::string conclusion;
  bool conditional = false;
};

struct CoveringReport {
  std::string group_name;
  int group_size = 0;
  std::size_t total_simplices = 0;
  bool sheets_check = true;       // projection is |G|-to-1 in every dimension
  bool deck_commutes = true;      // p(g x) = p(x) for all g
  bool euler_check = true;        // chi(total) = |G| chi(base)
  std::vector<bool> orbit_bijection;  // per degree of the lifted nerve
  bool stabilizers_fix_vertices = true;
  bool stabilizers_are_meets = true;
  bool stabilizers_match_components = true;
};

struct CertificateReport {
  std::string tool_version = kToolVersion;
  std::string input_digest;
  bool cover_valid = true;
  std::vector<CoverViolation> violations;
  int multiplicity = 0;
  std::vector<long> nerve_betti;  // padded to max(dim nerve, dim space) + 1
  ConvexityVerdict convexity;
  std::vector<SubgroupImageCertificate> amenability;
  std::optional<NerveMapReport> nerve_map;
  std::optional<CoveringReport> covering;
  std::vector<VanishingEntry> vanishing;

  bool has_unconditional_vanishing() const {
    for (const auto& v : vanishing)
      if (!v.conditional) return true;
    return false;
  }

  /// 0: certified vanishing; 3: valid run without an unconditional entry;
  /// 1: invalid input cover. Internal failures surface as exceptions and
  /// map to exit 2 at the CLI boundary.
  int exit_code() const {
    if (!cover_valid) return 1;
    return has_unconditional_vanishing() ? 0 : 3;
  }
};

namespace certify_detail {

inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << h;
  return os.str();
}

inline std::string simplex_to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.vertices()[i]);
  }
  return out + "}";
}

}  // namespace certify_detail

/// Core rule engine. Emits a report for a (space, element, attestation)
/// triple; the cover may be invalid, in which case only the violation list
/// is filled in.
inline CertificateReport certify_instance(const SimplicialComplex& x,
                                          const std::map<std::string, Subcomplex>& elements,
                                          const std::set<std::string>& attest,
                                          const CertifyOptions& options = {},
                                          const std::string& digest = "") {
  CertificateReport report;
  report.input_digest = digest;
  report.violations = cover_violations(x, elements);
  report.cover_valid = report.violations.empty();
  if (!report.cover_valid) return report;

  const Cover cover(x, elements);
  report.multiplicity = multiplicity(cover);
  const NerveComplex n = nerve(cover);
  if (n.complex.dim() + 1 != report.multiplicity)
    throw Error(ErrorCode::InternalCheckFailure,
                "nerve dimension does not match multiplicity");
  for (const auto& [ns, w] : n.witness) {
    for (VertexId v : ns.vertices())
      if (!cover.element(n.names[static_cast<std::size_t>(v)]).contains(w))
        throw Error(ErrorCode::InternalCheckFailure, "nerve witness outside an element");
  }

  const std::vector<long> nb = betti_numbers(n.complex);
  report.nerve_betti = nb;
  const int pad = std::max(n.complex.dim(), x.dim()) + 1;
  report.nerve_betti.resize(static_cast<std::size_t>(std::max<int>(pad, 0)), 0);

  report.convexity = is_convex(cover, n);
  report.amenability = amenability_verdict(cover, attest);
  bool any_unknown = false;
  for (const auto& cert : report.amenability)
    if (!cert.certified()) any_unknown = true;

  if (options.compute_nerve_map)
    report.nerve_map = nerve_map_report(x, cover, options.max_subdiv);

  auto betti_at = [&](int k) {
    return k < static_cast<int>(nb.size()) ? nb[static_cast<std::size_t>(k)] : 0L;
  };
  auto degree_wanted = [&](int k) {
    if (!options.degrees) return true;
    for (int d : *options.degrees)
      if (d == k) return true;
    return false;
  };
  const int cap = std::max({x.dim(), n.complex.dim(), report.multiplicity}) + 1;
  for (int k = 1; k <= cap; ++k) {
    if (!degree_wanted(k)) continue;
    if (betti_at(k) == 0 && report.convexity.convex) {
      VanishingEntry e;
      e.degree = k;
      e.rule = "NerveHomologyZero";
      e.conditional = any_unknown;
      e.conclusion = "comparison maps c_X and c^l1_X are zero in degree " + std::to_string(k) +
                     "; ||alpha||_1 = 0 for all alpha in H_" + std::to_string(k) + "(X;R)";
      if (e.conditional) e.conclusion += " (holds provided all elements are amenable)";
      report.vanishing.push_back(std::move(e));
    }
    if (k >= report.multiplicity) {
      VanishingEntry e;
      e.degree = k;
      e.rule = "MultiplicityBound";
      e.conditional = any_unknown;
      e.conclusion = "comparison map vanishes in degree " + std::to_string(k) +
                     " (degree >= multiplicity " + std::to_string(report.multiplicity) + ")";
      if (e.conditional) e.conclusion += " (holds provided all elements are amenable)";
      report.vanishing.push_back(std::move(e));
    }
  }
  return report;
}

/// Runs the covering-equivariance battery for one regular cover and fills
/// a CoveringReport; any structural violation of the lemmas is reported as
/// a false flag rather than silently ignored.
inline CoveringReport covering_checks(const SimplicialComplex& x, const Cover& u,
                                      const FiniteGroupTable& g, const EdgeLabeling& labels,
                                      const std::string& group_name) {
  CoveringReport out;
  out.group_name = group_name;
  out.group_size = g.size();
  const CoveringComplex c(x, g, labels);
  out.total_simplices = c.total().size();
  for (int d = 0; d <= c.total().dim(); ++d)
    if (c.total().simplices_of_dim(d).size() !=
        x.simplices_of_dim(d).size() * static_cast<std::size_t>(g.size()))
      out.sheets_check = false;
  for (int h = 0; h < g.size(); ++h)
    for (VertexId v : c.total().vertices())
      if (c.base_of(c.total_vertex(c.base_of(v), g.mul(h, c.sheet_of(v)))) != c.base_of(v))
        out.deck_commutes = false;
  out.euler_check =
      c.total().euler_characteristic() == g.size() * x.euler_characteristic();

  const NerveComplex n = nerve(u);
  const LiftedCoverData lifted = lift_cover(c, u);
  projection_nerve_map(lifted, n);  // validates simpliciality and invariance
  for (int d = 0; d <= lifted.nerve_up.complex.dim(); ++d)
    out.orbit_bijection.push_back(verify_orbit_bijection(lifted, n, d).holds);
  const NerveStabilizerReport st = nerve_stabilizers(c, lifted);
  out.stabilizers_fix_vertices = st.positive_dim_fix_vertices;
  out.stabilizers_are_meets = st.equals_vertex_intersection;
  out.stabilizers_match_components = st.vertex_matches_component;
  return out;
}

// ---------------------------------------------------------------------------
// JSON input
// ---------------------------------------------------------------------------

struct CertifyInput {
  std::shared_ptr<const SimplicialComplex> space;
  std::map<std::string, Subcomplex> elements;
  std::set<std::string> attest;
  std::optional<FiniteGroupTable> group;
  std::string group_name;
  EdgeLabeling edge_labels;
  CertifyOptions options;
  std::string digest;
};

namespace certify_detail {

using nlohmann::json;

inline std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// SAX walker that only looks for duplicate keys inside each object.
struct DuplicateKeyChecker : json::json_sax_t {
  std::vector<std::set<std::string>> stack;
  std::string duplicate;

  bool key(string_t& val) override {
    if (!stack.empty() && !stack.back().insert(val).second && duplicate.empty())
      duplicate = val;
    return true;
  }
  bool start_object(std::size_t) override { stack.emplace_back(); return true; }
  bool end_object() override { stack.pop_back(); return true; }
  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }
};

using Label = std::variant<long long, std::string>;

inline std::string label_to_string(const Label& l) {
  if (std::holds_alternative<long long>(l)) return std::to_string(std::get<long long>(l));
  return "\"" + std::get<std::string>(l) + "\"";
}

inline Label parse_label(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Label{j.get<long long>()};
  if (j.is_string()) return Label{j.get<std::string>()};
  throw Error(ErrorCode::ParseError,
              where + ": vertex labels must be integers or strings");
}

}  // namespace certify_detail

/// Strict parsing of the input document. Vertex labels (integers or
/// strings) are mapped to canonical ids: integers ascending first, then
/// strings in lexicographic order.
inline CertifyInput load_input_from_string(const std::string& text,
                                           const std::string& origin = "<input>") {
  using certify_detail::json;
  using certify_detail::Label;

  certify_detail::DuplicateKeyChecker dup;
  json::sax_parse(text, &dup);
  if (!dup.duplicate.empty())
    throw Error(ErrorCode::ParseError, origin + ": duplicate key '" + dup.duplicate + "'");

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                origin + ":" + std::to_string(certify_detail::line_of_offset(text, e.byte)) +
                    ": " + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::ParseError, origin + ": top level must be an object");
  static const std::set<std::string> known = {"complex", "cover", "attest_amenable",
                                              "regular_cover", "options"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key))
      throw Error(ErrorCode::ParseError, origin + ": unknown top-level key '" + key + "'");
  if (!doc.contains("complex") || !doc["complex"].is_array())
    throw Error(ErrorCode::ParseError, origin + ": 'complex' must be an array of simplices");
  if (!doc.contains("cover") || !doc["cover"].is_object())
    throw Error(ErrorCode::ParseError, origin + ": 'cover' must be an object");

  auto parse_simplex_labels = [&](const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
      throw Error(ErrorCode::ParseError, where + ": a simplex must be a nonempty array");
    std::vector<Label> out;
    for (const auto& v : j) out.push_back(certify_detail::parse_label(v, where));
    return out;
  };

  std::set<Label> labels;
  std::vector<std::vector<Label>> complex_simplices;
  for (const auto& s : doc["complex"]) {
    auto verts = parse_simplex_labels(s, origin + ": complex");
    for (const auto& l : verts) labels.insert(l);
    complex_simplices.push_back(std::move(verts));
  }
  std::map<Label, VertexId> id_of;
  for (const Label& l : labels) id_of.emplace(l, static_cast<VertexId>(id_of.size()));

  auto to_vertex_lists = [&](const std::vector<std::vector<Label>>& in, const std::string& where) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& verts : in) {
      std::vector<VertexId> ids;
      for (const Label& l : verts) {
        const auto it = id_of.find(l);
        if (it == id_of.end()) {
          std::string s = "[";
          for (std::size_t i = 0; i < verts.size(); ++i)
            s += (i ? "," : "") + certify_detail::label_to_string(verts[i]);
          throw Error(ErrorCode::ParseError,
                      where + ": simplex " + s + "] references undeclared vertex " +
                          certify_detail::label_to_string(l));
        }
        ids.push_back(it->second);
      }
      out.push_back(std::move(ids));
    }
    return out;
  };

  CertifyInput input;
  input.digest = certify_detail::fnv1a64(text);
  try {
    input.space = std::make_shared<const SimplicialComplex>(
        SimplicialComplex::from_maximal(to_vertex_lists(complex_simplices, origin + ": complex")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, origin + ": complex: " + e.what());
  }

  for (const auto& [name, simplices] : doc["cover"].items()) {
    std::vector<std::vector<Label>> raw;
    if (!simplices.is_array())
      throw Error(ErrorCode::ParseError,
                  origin + ": cover element '" + name + "' must be an array of simplices");
    for (const auto& s : simplices)
      raw.push_back(parse_simplex_labels(s, origin + ": cover element '" + name + "'"));
    const auto lists = to_vertex_lists(raw, origin + ": cover element '" + name + "'");
    try {
      input.elements.emplace(name, Subcomplex::from_maximal(*input.space, lists));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, origin + ": cover element '" + name +
                                             "' contains a simplex not present in the complex");
    }
  }

  if (doc.contains("attest_amenable")) {
    if (!doc["attest_amenable"].is_array())
      throw Error(ErrorCode::ParseError, origin + ": 'attest_amenable' must be an array");
    for (const auto& n : doc["attest_amenable"]) {
      if (!n.is_string())
        throw Error(ErrorCode::ParseError, origin + ": attestations must be element names");
      if (!input.elements.count(n.get<std::string>()))
        throw Error(ErrorCode::ParseError,
                    origin + ": attestation names unknown element '" + n.get<std::string>() + "'");
      input.attest.insert(n.get<std::string>());
    }
  }

  if (doc.contains("regular_cover")) {
    const auto& rc = doc["regular_cover"];
    if (!rc.is_object() || !rc.contains("group"))
      throw Error(ErrorCode::ParseError, origin + ": 'regular_cover' needs a 'group'");
    if (rc["group"].is_string()) {
      input.group_name = rc["group"].get<std::string>();
      try {
        input.group = FiniteGroupTable::builtin(input.group_name);
      } catch (const Error&) {
        throw Error(ErrorCode::ParseError,
                    origin + ": unknown builtin group '" + input.group_name + "'");
      }
    } else if (rc["group"].is_object()) {
      const auto& g = rc["group"];
      if (!g.contains("elements") || !g.contains("table"))
        throw Error(ErrorCode::ParseError,
                    origin + ": explicit group needs 'elements' and 'table'");
      std::vector<std::string> names = g["elements"].get<std::vector<std::string>>();
      std::vector<std::vector<int>> table = g["table"].get<std::vector<std::vector<int>>>();
      try {
        input.group = FiniteGroupTable::from_table(std::move(names), std::move(table));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, origin + ": group table invalid: " + e.what());
      }
      input.group_name = "custom";
    } else {
      throw Error(ErrorCode::ParseError, origin + ": 'group' must be a name or a table");
    }
    if (rc.contains("edge_labels")) {
      if (!rc["edge_labels"].is_array())
        throw Error(ErrorCode::ParseError, origin + ": 'edge_labels' must be an array");
      for (const auto& entry : rc["edge_labels"]) {
        if (!entry.is_array() || entry.size() != 3)
          throw Error(ErrorCode::ParseError,
                      origin + ": each edge label must be [u, v, element-index]");
        const Label lu = certify_detail::parse_label(entry[0], origin + ": edge_labels");
        const Label lv = certify_detail::parse_label(entry[1], origin + ": edge_labels");
        if (!entry[2].is_number_integer())
          throw Error(ErrorCode::ParseError, origin + ": edge label index must be an integer");
        const int gi = entry[2].get<int>();
        if (gi < 0 || gi >= input.group->size())
          throw Error(ErrorCode::ParseError, origin + ": edge label index out of range");
        const auto iu = id_of.find(lu), iv = id_of.find(lv);
        if (iu == id_of.end() || iv == id_of.end())
          throw Error(ErrorCode::ParseError, origin + ": edge label references unknown vertex");
        input.edge_labels.set(iu->second, iv->second, gi, *input.group);
      }
    }
  }

  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object())
      throw Error(ErrorCode::ParseError, origin + ": 'options' must be an object");
    if (o.contains("max_subdiv")) input.options.max_subdiv = o["max_subdiv"].get<int>();
    if (o.contains("compute_nerve_map"))
      input.options.compute_nerve_map = o["compute_nerve_map"].get<bool>();
    if (o.contains("degrees"))
      input.options.degrees = o["degrees"].get<std::vector<int>>();
  }
  return input;
}

inline CertifyInput load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_input_from_string(buf.str(), path);
}

/// Full pipeline over a parsed input.
inline CertificateReport certify(const CertifyInput& input) {
  CertificateReport report = certify_instance(*input.space, input.elements, input.attest,
                                              input.options, input.digest);
  if (report.cover_valid && input.group) {
    const Cover cover(*input.space, input.elements);
    report.covering = covering_checks(*input.space, cover, *input.group, input.edge_labels,
                                      input.group_name);
  }
  return report;
}

inline CertificateReport certify_corpus(const std::string& name,
                                        const CertifyOptions& options = {}) {
  const CorpusInstance inst = corpus(name);
  return certify_instance(*inst.space, inst.cover.elements(), inst.attest, options,
                          certify_detail::fnv1a64("corpus:" + name));
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const CertificateReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["input_digest"] = r.input_digest;
  j["cover_valid"] = r.cover_valid;
  j["violations"] = ordered_json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"code", error_code_name(v.code)}, {"detail", v.detail}});
  if (!r.cover_valid) return j;
  j["multiplicity"] = r.multiplicity;
  j["nerve_betti"] = r.nerve_betti;
  j["convexity"]["convex"] = r.convexity.convex;
  if (r.convexity.witness_failure) {
    j["convexity"]["witness_elements"] = r.convexity.witness_failure->first;
    j["convexity"]["witness_component_count"] = r.convexity.witness_failure->second.size();
  }
  j["amenability"] = ordered_json::array();
  for (const auto& c : r.amenability) {
    ordered_json e;
    e["element"] = c.element_name;
    e["verdict"] = c.reason ? std::string("CertifiedAmenable") : std::string("Unknown");
    if (c.reason) e["reason"] = amenability_reason_name(*c.reason);
    e["generator_words"] = c.generator_words;
    j["amenability"].push_back(std::move(e));
  }
  if (r.nerve_map) {
    j["nerve_map"]["rounds"] = r.nerve_map->rounds;
    j["nerve_map"]["simplicial"] = r.nerve_map->simplicial;
    j["nerve_map"]["induced_ranks"] = r.nerve_map->induced_ranks;
  }
  if (r.covering) {
    const auto& c = *r.covering;
    j["covering"]["group"] = c.group_name;
    j["covering"]["group_size"] = c.group_size;
    j["covering"]["total_simplices"] = c.total_simplices;
    j["covering"]["sheets_check"] = c.sheets_check;
    j["covering"]["deck_commutes"] = c.deck_commutes;
    j["covering"]["euler_check"] = c.euler_check;
    j["covering"]["orbit_bijection"] = c.orbit_bijection;
    j["covering"]["stabilizers_fix_vertices"] = c.stabilizers_fix_vertices;
    j["covering"]["stabilizers_are_meets"] = c.stabilizers_are_meets;
    j["covering"]["stabilizers_match_components"] = c.stabilizers_match_components;
  }
  j["vanishing"] = ordered_json::array();
  for (const auto& v : r.vanishing)
    j["vanishing"].push_back({{"degree", v.degree},
                              {"rule", v.rule},
                              {"conclusion", v.conclusion},
                              {"conditional", v.conditional}});
  return j;
}

inline std::string report_to_text(const CertificateReport& r) {
  std::ostringstream os;
  os << r.tool_version << "  (" << r.input_digest << ")\n";
  if (!r.cover_valid) {
    os << "cover: INVALID\n";
    for (const auto& v : r.violations)
      os << "  - " << error_code_name(v.code) << ": " << v.detail << "\n";
    return os.str();
  }
  os << "cover: valid\n";
  os << "multiplicity: " << r.multiplicity << "\n";
  os << "nerve betti:";
  for (long b : r.nerve_betti) os << " " << b;
  os << "\n";
  os << "convex: " << (r.convexity.convex ? "yes" : "no");
  if (r.convexity.witness_failure) {
    os << "  (witness:";
    for (const auto& n : r.convexity.witness_failure->first) os << " " << n;
    os << "; " << r.convexity.witness_failure->second.size() << " components)";
  }
  os << "\n";
  os << "amenability:\n";
  for (const auto& c : r.amenability)
    os << "  " << c.element_name << ": "
       << (c.reason ? amenability_reason_name(*c.reason) : "Unknown") << "\n";
  if (r.nerve_map) {
    os << "nerve map: rounds=" << r.nerve_map->rounds << ", induced ranks:";
    for (std::size_t k : r.nerve_map->induced_ranks) os << " " << k;
    os << "\n";
  }
  if (r.covering) {
    const auto& c = *r.covering;
    os << "regular cover (" << c.group_name << ", |G|=" << c.group_size << "): "
       << "sheets=" << (c.sheets_check ? "ok" : "FAIL")
       << " deck=" << (c.deck_commutes ? "ok" : "FAIL")
       << " euler=" << (c.euler_check ? "ok" : "FAIL") << " orbit-bijection=";
    for (bool b : c.orbit_bijection) os << (b ? "1" : "0");
    os << " stabilizers="
       << ((c.stabilizers_fix_vertices && c.stabilizers_are_meets &&
            c.stabilizers_match_components)
               ? "ok"
               : "FAIL")
       << "\n";
  }
  if (r.vanishing.empty()) {
    os << "vanishing: none\n";
  } else {
    os << "vanishing:\n";
    for (const auto& v : r.vanishing)
      os << "  degree " << v.degree << " [" << v.rule << (v.conditional ? ", conditional" : "")
         << "]: " << v.conclusion << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Self-test: the corpus assertions anchored to published computations.
// ---------------------------------------------------------------------------

inline bool self_test(std::ostream& os) {
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    os << (cond ? "pass" : "FAIL") << ": " << what << "\n";
    ok = ok && cond;
  };

  {
    const CertificateReport r = certify_corpus("example2", CertifyOptions{8, false, {}});
    check(r.multiplicity == 4, "example2 multiplicity 4");
    check(r.nerve_betti == std::vector<long>{1, 0, 0, 0}, "example2 nerve betti (1,0,0,0)");
    check(!r.convexity.convex && r.convexity.witness_failure &&
              r.convexity.witness_failure->second.size() == 2,
          "example2 not convex, two-component witness");
    bool deg2 = false;
    for (const auto& v : r.vanishing)
      if (v.degree == 2) deg2 = true;
    check(!deg2, "example2 has no degree-2 vanishing entry");
    const CorpusInstance inst = corpus("example2");
    const NerveComplex n = nerve(inst.cover);
    check(n.complex.size() == 15 && n.complex.dim() == 3, "example2 nerve is the full 3-simplex");
  }
  {
    const CertificateReport r = certify_corpus("example1", CertifyOptions{8, false, {}});
    check(r.nerve_betti == std::vector<long>{1, 2, 1}, "example1 nerve betti (1,2,1)");
    check(r.convexity.convex, "example1 cover is convex");
    check(r.multiplicity == 3, "example1 multiplicity 3");
    const CorpusInstance inst = corpus("example1");
    check(betti_numbers(*inst.space) == std::vector<long>{1, 4, 1},
          "example1 space is a genus-2 surface");
    const NerveComplex n = nerve(inst.cover);
    // Boundary octahedron on D1, D2, U1..U4: D's opposite, U's a 4-cycle.
    bool oct = true;
    const std::vector<std::string> ds = {"D1", "D2"}, us = {"U1", "U2", "U3", "U4"};
    for (int i = 0; i < 4; ++i)
      for (const auto& d : ds) {
        const Simplex t = Simplex::from_vertices(
            {n.vertex_of(d), n.vertex_of(us[static_cast<std::size_t>(i)]),
             n.vertex_of(us[static_cast<std::size_t>((i + 1) % 4)])});
        if (!n.complex.contains(t)) oct = false;
      }
    if (n.complex.contains(Simplex::from_vertices({n.vertex_of("D1"), n.vertex_of("D2")})))
      oct = false;
    if (n.complex.contains(Simplex::from_vertices({n.vertex_of("U1"), n.vertex_of("U3")})))
      oct = false;
    if (n.complex.contains(Simplex::from_vertices({n.vertex_of("U2"), n.vertex_of("U4")})))
      oct = false;
    check(oct, "example1 nerve contains the boundary octahedron on D1,D2,U1..U4");
  }
  {
    const CertificateReport r = certify_corpus("torus_annuli", CertifyOptions{8, false, {}});
    bool deg2_unconditional = false;
    for (const auto& v : r.vanishing)
      if (v.degree == 2 && v.rule == "NerveHomologyZero" && !v.conditional)
        deg2_unconditional = true;
    check(deg2_unconditional, "torus_annuli certifies unconditional degree-2 vanishing");
    check(r.exit_code() == 0, "torus_annuli exit code 0");
  }
  {
    const CertificateReport r = certify_corpus("sphere_two_discs", CertifyOptions{8, false, {}});
    bool deg2_unconditional = false;
    for (const auto& v : r.vanishing)
      if (v.degree == 2 && v.rule == "NerveHomologyZero" && !v.conditional)
        deg2_unconditional = true;
    check(deg2_unconditional, "sphere_two_discs certifies unconditional degree-2 vanishing");
  }
  {
    const CorpusInstance inst = corpus("circle_stars");
    const NerveComplex n = nerve(inst.cover);
    check(n.complex.dim() == 1 && n.complex.size() == 6 &&
              betti_numbers(n.complex) == std::vector<long>{1, 1},
          "circle_stars nerve is the boundary of a triangle");
  }
  return ok;
}

}  // namespace covercert

#endif
