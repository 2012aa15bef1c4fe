#include "report.hpp"

#include "equiv.hpp"
#include "genus2.hpp"
#include "invariants.hpp"
#include "weier.hpp"

#include <sstream>

namespace hyc {

namespace {

std::vector<int> perm_from_orbits(const Json& j, int n, const char* what) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (j.is_null()) return perm;
  if (!j.is_array())
    throw AnalysisError(1, std::string(what) + " must be a list of orbits");
  for (const auto& orbit : j) {
    std::vector<int> cyc = orbit.get<std::vector<int>>();
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= n)
        throw AnalysisError(1, std::string(what) + ": root index out of range");
      perm[a] = b;
    }
  }
  return perm;
}

std::string members_key(const ClusterPicture& p, int s) {
  std::string key;
  for (size_t i = 0; i < p.clusters[s].members.size(); ++i)
    key += (i ? "," : "") + std::to_string(p.clusters[s].members[i]);
  return key;
}

Json matrix_json(const MatZ& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back((long long)x);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

AnalysisInput load_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw AnalysisError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.contains("roots")) {
      RootSet rs;
      rs.p = j.at("prime").get<long long>();
      rs.leading_coefficient =
          parse_rational(j.at("leading_coefficient").get<std::string>());
      for (const auto& r : j.at("roots")) {
        if (r.contains("rat")) {
          rs.roots.push_back({parse_rational(r.at("rat").get<std::string>()), 0, 0});
        } else if (r.contains("surd")) {
          const auto& s = r.at("surd");
          rs.roots.push_back({parse_rational(s.at("a").get<std::string>()),
                              parse_rational(s.at("b").get<std::string>()),
                              Z(s.at("d").get<long long>())});
        } else {
          throw AnalysisError(1, "each root needs a \"rat\" or \"surd\" entry");
        }
      }
      validate_rootset(rs);
      IngestResult in = ingest(rs);
      return {std::move(in.picture), std::move(in.galois)};
    }
    if (!j.contains("picture"))
      throw AnalysisError(1, "input needs a \"roots\" or \"picture\" entry");
    Z lead = j.value("leading_valuation", 0);
    ParsedPicture pp = parse_picture(j.at("picture").get<std::string>(), lead);
    AnalysisInput in{std::move(pp.picture), std::move(pp.galois)};
    int n = in.picture.root_count;
    if (j.contains("prime")) in.galois.residue_size = j.at("prime").get<long long>();
    in.galois.frobenius =
        perm_from_orbits(j.value("frobenius", Json()), n, "frobenius");
    in.galois.inertia = perm_from_orbits(j.value("inertia", Json()), n, "inertia");
    if (j.contains("epsilon")) {
      for (const auto& [key, val] : j.at("epsilon").items()) {
        std::vector<int> mem;
        std::istringstream is(key);
        for (std::string tok; std::getline(is, tok, ',');)
          mem.push_back(std::stoi(tok));
        std::sort(mem.begin(), mem.end());
        int s = in.picture.find(mem);
        if (s < 0) throw AnalysisError(1, "epsilon key {" + key + "} is not a cluster");
        in.galois.epsilon[s] = val.get<int>();
      }
    }
    auto errs = validate_picture(in.picture);
    if (!errs.empty()) throw AnalysisError(2, errs[0]);
    if (!is_picture_automorphism(in.picture, in.galois.frobenius) ||
        !is_picture_automorphism(in.picture, in.galois.inertia))
      throw AnalysisError(2, "permutation is not a picture automorphism");
    return in;
  } catch (const AnalysisError&) {
    throw;
  } catch (const ParseError& e) {
    throw AnalysisError(1, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw AnalysisError(1, std::string("malformed input: ") + e.what());
  } catch (const std::exception& e) {
    throw AnalysisError(2, e.what());
  }
}

Json analyze_report(const AnalysisInput& in, bool strict) {
  const ClusterPicture& p = in.picture;
  const GaloisData& g = in.galois;
  if (strict && g.tame && g.tame_attested && !g.from_roots)
    throw AnalysisError(2, "strict mode: tameness is attested, not derived");

  Json rep;
  rep["picture"] = serialize_picture(p, &g);
  rep["leading_valuation"] = (long long)p.leading_valuation;
  rep["prime"] = (long long)g.residue_size;
  rep["genus"] = p.genus();
  rep["clusters"] = Json::array();
  for (int s : proper_clusters(p)) {
    Json c;
    c["members"] = members_key(p, s);
    c["depth"] = show_rational(p.depth(s));
    auto at = classify_cluster(p, s);
    c["principal"] = at.principal;
    if (at.twin) c["twin"] = true;
    if (at.ubereven) c["ubereven"] = true;
    rep["clusters"].push_back(c);
  }
  rep["disc_valuation"] = show_rational(disc_valuation(p));
  rep["integral"] = is_integral(p, g, p.leading_valuation);
  rep["perturbation_bound"] = (long long)perturbation_bound(p);

  auto ss = check_semistability(p, g);
  rep["semistable"] = ss.semistable;
  if (!ss.semistable) {
    rep["witnesses"] = ss.witnesses;
    return rep;
  }

  DualGraph dg = dual_graph(p, g);
  Json graph;
  graph["vertices"] = Json::array();
  for (const auto& v : dg.vertices) {
    Json vj;
    vj["cluster"] = members_key(p, v.cluster);
    if (v.sign != 0) vj["sign"] = v.sign;
    vj["genus"] = v.genus;
    graph["vertices"].push_back(vj);
  }
  graph["chains"] = Json::array();
  for (const auto& c : dg.chains) {
    Json cj;
    cj["name"] = c.name;
    cj["from"] = c.from;
    cj["to"] = c.to;
    cj["length"] = (long long)c.length;
    graph["chains"].push_back(cj);
  }
  rep["dual_graph"] = graph;
  rep["components"] = (long long)count_components(p, g);

  auto hl = homology_lattice(p, g);
  rep["homology_rank"] = hl.rank;
  rep["pairing"] = matrix_json(hl.gram);
  rep["frobenius_action"] = matrix_json(hl.frob);
  rep["conductor"] = conductor_semistable(p, g);
  rep["tamagawa"] = (long long)tamagawa(hl);
  rep["root_number"] = root_number(hl);
  rep["deficient"] = deficiency(p, g);

  auto mini = is_minimal_model(p, g, p.leading_valuation);
  rep["minimal"] = mini.minimal;
  rep["minimal_certificate"] = mini.certificate;
  rep["min_disc_valuation"] =
      show_rational(min_disc_valuation(p, g, p.leading_valuation));
  rep["reduction_type"] = reduction_type_label(p, g);
  return rep;
}

std::string render_text(const Json& report, int indent) {
  std::ostringstream os;
  std::string pad(indent, ' ');
  for (const auto& [key, val] : report.items()) {
    if (val.is_object()) {
      os << pad << key << ":\n" << render_text(val, indent + 2);
    } else if (val.is_array() && !val.empty() && val[0].is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : val) os << render_text(item, indent + 2) << pad << "\n";
    } else {
      os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
         << "\n";
    }
  }
  return os.str();
}

Json error_object(const AnalysisError& e) {
  Json j;
  j["error"]["kind"] = e.exit_code == 1 ? "parse" : "semantic";
  j["error"]["message"] = e.what();
  return j;
}

}  // namespace hyc
