#include "matchpd/io.hpp"

#include <sstream>

#include <json.hpp>

#include "matchpd/rng.hpp"

namespace matchpd {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

Rational json_to_rational(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational((long long)v.get<unsigned long long>());
  if (v.is_number_float()) return Rational::from_double(v.get<double>());
  throw std::runtime_error("expected rational (string or number) in " + where);
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  int n_left = 0, n_right = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  std::optional<std::vector<Rational>> vertex_weights;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (header_seen) parse_fail(lineno, "duplicate header");
      std::string kind;
      if (!(ls >> kind >> n_left >> n_right >> m) || kind != "bpm")
        parse_fail(lineno, "expected 'p bpm <n_left> <n_right> <m>'");
      if (n_left < 0 || n_right < 0 || m < 0) parse_fail(lineno, "negative size");
      header_seen = true;
      continue;
    }
    if (!header_seen) parse_fail(lineno, "line before 'p bpm' header");
    if (tag == "e") {
      int l, r;
      std::string w;
      if (!(ls >> l >> r >> w)) parse_fail(lineno, "expected 'e <l> <r> <weight>'");
      if (l < 0 || l >= n_left || r < 0 || r >= n_right)
        parse_fail(lineno, "edge endpoint out of range");
      for (const Edge& e : edges)
        if (e.left == l && e.right == r) parse_fail(lineno, "duplicate edge");
      Rational wr;
      try {
        wr = Rational::parse(w);
      } catch (const std::exception& ex) {
        parse_fail(lineno, ex.what());
      }
      edges.push_back({l, r});
      weights.push_back(wr);
      continue;
    }
    if (tag == "w") {
      int l;
      std::string w;
      if (!(ls >> l >> w)) parse_fail(lineno, "expected 'w <l> <weight>'");
      if (l < 0 || l >= n_left) parse_fail(lineno, "vertex index out of range");
      if (!vertex_weights) vertex_weights = std::vector<Rational>(n_left);
      try {
        (*vertex_weights)[l] = Rational::parse(w);
      } catch (const std::exception& ex) {
        parse_fail(lineno, ex.what());
      }
      continue;
    }
    parse_fail(lineno, "unknown line tag '" + tag + "'");
  }
  if (!header_seen) parse_fail(lineno, "missing 'p bpm' header");
  if ((int)edges.size() != m)
    parse_fail(lineno, "edge count mismatch: header says " + std::to_string(m) + ", got " +
                           std::to_string(edges.size()));
  return {BipartiteInstance(n_left, n_right, std::move(edges), std::move(weights)),
          std::move(vertex_weights)};
}

std::string print_instance_text(const ParsedInstance& parsed) {
  const BipartiteInstance& inst = parsed.instance;
  std::ostringstream out;
  out << "p bpm " << inst.n_left() << " " << inst.n_right() << " " << inst.edges().size()
      << "\n";
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    out << "e " << e.left << " " << e.right << " " << inst.weight(i).to_string() << "\n";
  }
  if (parsed.left_vertex_weights)
    for (int l = 0; l < inst.n_left(); ++l)
      out << "w " << l << " " << (*parsed.left_vertex_weights)[l].to_string() << "\n";
  return out.str();
}

OnlineInstance parse_online_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad online instance JSON: ") + ex.what());
  }
  OnlineInstance inst;
  if (!doc.contains("offline") || !doc["offline"].is_number())
    throw std::runtime_error("online instance: missing 'offline' count");
  inst.offline = doc["offline"].get<int>();
  if (!doc.contains("arrivals") || !doc["arrivals"].is_array())
    throw std::runtime_error("online instance: missing 'arrivals' array");
  for (const json& nbh : doc["arrivals"]) {
    if (!nbh.is_array()) throw std::runtime_error("online instance: arrival must be an array");
    std::vector<int> ns;
    for (const json& v : nbh) ns.push_back(v.get<int>());
    inst.arrivals.push_back(std::move(ns));
  }
  if (doc.contains("offline_weights")) {
    std::vector<Rational> ws(inst.offline, Rational(1));
    for (auto& [key, value] : doc["offline_weights"].items()) {
      int idx = std::stoi(key);
      if (idx < 0 || idx >= inst.offline)
        throw std::runtime_error("online instance: weight index out of range");
      ws[idx] = json_to_rational(value, "offline_weights");
    }
    inst.offline_weights = std::move(ws);
  }
  inst.validate();
  return inst;
}

std::string print_online_json(const OnlineInstance& inst) {
  json doc;
  doc["offline"] = inst.offline;
  doc["arrivals"] = inst.arrivals;
  if (inst.offline_weights) {
    json ws = json::object();
    for (int i = 0; i < inst.offline; ++i)
      ws[std::to_string(i)] = (*inst.offline_weights)[i].to_string();
    doc["offline_weights"] = ws;
  }
  return doc.dump(2) + "\n";
}

AdwordsInstance parse_adwords_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad adwords instance JSON: ") + ex.what());
  }
  AdwordsInstance inst;
  if (!doc.contains("budgets") || !doc["budgets"].is_array())
    throw std::runtime_error("adwords instance: missing 'budgets'");
  for (const json& b : doc["budgets"]) inst.budgets.push_back(json_to_rational(b, "budgets"));
  if (!doc.contains("queries") || !doc["queries"].is_array())
    throw std::runtime_error("adwords instance: missing 'queries'");
  for (const json& q : doc["queries"]) {
    if (!q.contains("bids")) throw std::runtime_error("adwords instance: query without 'bids'");
    std::vector<std::pair<int, Rational>> bids;
    for (auto& [key, value] : q["bids"].items())
      bids.emplace_back(std::stoi(key), json_to_rational(value, "bids"));
    std::sort(bids.begin(), bids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    inst.queries.push_back(std::move(bids));
  }
  if (doc.contains("bid_fraction_cap"))
    inst.bid_fraction_cap = json_to_rational(doc["bid_fraction_cap"], "bid_fraction_cap");
  inst.validate();
  return inst;
}

std::string print_adwords_json(const AdwordsInstance& inst) {
  json doc;
  json budgets = json::array();
  for (const Rational& b : inst.budgets) budgets.push_back(b.to_string());
  doc["budgets"] = budgets;
  json queries = json::array();
  for (const auto& q : inst.queries) {
    json bids = json::object();
    for (const auto& [bidder, bid] : q) bids[std::to_string(bidder)] = bid.to_string();
    queries.push_back(json{{"bids", bids}});
  }
  doc["queries"] = queries;
  doc["bid_fraction_cap"] = inst.bid_fraction_cap.to_string();
  return doc.dump(2) + "\n";
}

namespace {

json certificate_to_json(const CertificateReport& report) {
  json c;
  c["verdict"] = report.verdict;
  if (report.failed_condition) c["failed_condition"] = to_string(*report.failed_condition);
  if (report.witness) {
    if (std::holds_alternative<Edge>(*report.witness)) {
      const Edge& e = std::get<Edge>(*report.witness);
      c["witness"] = json::array({e.left, e.right});
    } else {
      c["witness"] = std::get<VertexId>(*report.witness).to_string();
    }
  }
  return c;
}

}  // namespace

std::string print_certificate_json(const CertificateReport& report) {
  return certificate_to_json(report).dump(2) + "\n";
}

std::string print_result_json(const ResultDocument& doc, const BipartiteInstance& inst) {
  json out;
  out["problem"] = doc.problem;
  out["algorithm"] = doc.algorithm;
  json matching = json::array();
  for (const Edge& e : doc.matching.edges) matching.push_back(json::array({e.left, e.right}));
  out["matching"] = matching;
  out["value"] = doc.value.to_string();
  json pot = json::object();
  for (int i = 0; i < inst.n_left(); ++i)
    pot["L" + std::to_string(i)] = doc.potential.left[i].to_string();
  for (int i = 0; i < inst.n_right(); ++i)
    pot["R" + std::to_string(i)] = doc.potential.right[i].to_string();
  out["potential"] = pot;
  out["certificate"] = certificate_to_json(doc.certificate);
  out["stats"] = json{{"iterations", doc.stats.iterations}, {"pda_count", doc.stats.pda_count}};
  return out.dump(2) + "\n";
}

ResultDocument parse_result_json(const std::string& text, const BipartiteInstance& inst) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad result JSON: ") + ex.what());
  }
  ResultDocument out;
  try {
    out.problem = doc.at("problem").get<std::string>();
    out.algorithm = doc.at("algorithm").get<std::string>();
    std::vector<Edge> edges;
    for (const json& e : doc.at("matching"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    out.matching = Matching(std::move(edges));
    out.value = json_to_rational(doc.at("value"), "value");
    out.potential = Potential(inst.n_left(), inst.n_right());
    const json& pot = doc.at("potential");
    for (int i = 0; i < inst.n_left(); ++i)
      out.potential.left[i] = json_to_rational(pot.at("L" + std::to_string(i)), "potential");
    for (int i = 0; i < inst.n_right(); ++i)
      out.potential.right[i] = json_to_rational(pot.at("R" + std::to_string(i)), "potential");
    out.certificate.verdict = doc.at("certificate").at("verdict").get<bool>();
    if (doc.contains("stats")) {
      out.stats.iterations = doc["stats"].value("iterations", 0LL);
      out.stats.pda_count = doc["stats"].value("pda_count", 0LL);
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad result JSON: ") + ex.what());
  }
  return out;
}

std::string print_ratio_json(const std::string& mode, const RatioEstimate& est) {
  json out;
  out["mode"] = mode;
  out["trials"] = est.trials;
  out["mean_value"] = est.mean_value;
  out["opt"] = est.opt.to_string();
  out["mean_ratio"] = est.mean_ratio;
  out["std_error"] = est.std_error;
  out["seed"] = est.seed;
  return out.dump(2) + "\n";
}

std::string print_dual_check_json(const std::vector<EdgeDualEstimate>& report, long long trials,
                                  uint64_t seed) {
  json out;
  out["mode"] = "dual-check";
  out["trials"] = trials;
  out["seed"] = seed;
  json edges = json::array();
  long long flagged = 0;
  for (const EdgeDualEstimate& e : report) {
    edges.push_back(json{{"offline", e.offline},
                         {"arrival", e.arrival},
                         {"estimate", e.estimate},
                         {"std_error", e.std_error},
                         {"flagged", e.flagged}});
    if (e.flagged) ++flagged;
  }
  out["edges"] = edges;
  out["flagged_count"] = flagged;
  return out.dump(2) + "\n";
}

std::string print_adwords_result_json(const AdwordsRun& run, const Rational& opt_bound) {
  json out;
  out["mode"] = "adwords";
  out["revenue"] = run.revenue.to_string();
  out["opt_upper_bound"] = opt_bound.to_string();
  out["ratio"] = opt_bound.is_zero() ? 0.0 : run.revenue.to_double() / opt_bound.to_double();
  long long assigned = 0;
  for (const auto& a : run.assignment)
    if (a) ++assigned;
  out["assigned_queries"] = assigned;
  return out.dump(2) + "\n";
}

ParsedInstance gen_random_instance(int n, uint64_t seed) {
  Rng rng(mix64(seed ^ 0xA11CEull));
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r)
      if (rng.bernoulli(0.5)) {
        edges.push_back({l, r});
        weights.push_back(Rational(rng.uniform_int(0, 10)));
      }
  return {BipartiteInstance(n, n, std::move(edges), std::move(weights)), std::nullopt};
}

ParsedInstance gen_complete_instance(int n) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      edges.push_back({l, r});
      weights.push_back(Rational(1));
    }
  return {BipartiteInstance(n, n, std::move(edges), std::move(weights)), std::nullopt};
}

OnlineInstance gen_upper_triangular(int n) {
  // arrival j sees {0 .. n-1-j}: neighborhoods shrink over time, so early
  // arrivals can steal the only option of later ones. This is the direction
  // that drives RANKING toward its 1 - 1/e bound; the mirrored order (growing
  // neighborhoods) is solved perfectly by any greedy.
  OnlineInstance inst;
  inst.offline = n;
  for (int j = 0; j < n; ++j) {
    std::vector<int> nbh;
    for (int v = 0; v < n - j; ++v) nbh.push_back(v);
    inst.arrivals.push_back(std::move(nbh));
  }
  return inst;
}

AdwordsInstance gen_adwords_smallbids(int n, uint64_t seed) {
  Rng rng(mix64(seed ^ 0xADAull));
  AdwordsInstance inst;
  inst.budgets.assign(n, Rational(100));
  int queries = 100 * n;
  for (int q = 0; q < queries; ++q) {
    std::vector<std::pair<int, Rational>> bids;
    for (int b = 0; b < n; ++b)
      if (rng.bernoulli(0.3))
        bids.emplace_back(b, Rational(rng.uniform_int(1, 200), 100));  // <= 2 = budget/50
    inst.queries.push_back(std::move(bids));
  }
  return inst;
}

}  // namespace matchpd
