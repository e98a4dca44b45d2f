#include "woc/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "woc/complex.hpp"
#include "woc/core.hpp"
#include "woc/enumerate.hpp"
#include "woc/medium.hpp"
#include "woc/metric.hpp"
#include "woc/text.hpp"

namespace woc::cli {

using json = nlohmann::ordered_json;

namespace {

void require_valid_n(int n, int cap) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > kMaxGround)
    throw std::invalid_argument("n must be at most " + std::to_string(kMaxGround));
  if (n > cap)
    throw wo_error(errc::cap_exceeded,
                   "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                       " (raise with --cap or WOC_CAP)");
}

json document(const std::string& command, json parameters, json payload) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["payload"] = std::move(payload);
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json point_json(const std::vector<Rational>& point) {
  json out = json::array();
  for (const Rational& r : point) out.push_back(json::array({r.num, r.den}));
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ',')) parts.push_back(item);
  return parts;
}

// --- check reports ---------------------------------------------------------

json check_partial_cube(const Ground& g, int cap) {
  const DistanceReport report = verify_partial_cube(g, cap);
  json payload;
  payload["n"] = g.size();
  payload["pairs_checked"] = report.pair_count;
  payload["max_graph_distance"] = report.max_graph_distance;
  payload["mismatch_count"] = report.mismatches.size();
  json mismatches = json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back({{"u", m.u},
                          {"v", m.v},
                          {"graph_distance", m.graph_distance},
                          {"hamming_distance", m.hamming_distance}});
  payload["mismatches"] = std::move(mismatches);
  payload["passed"] = report.passed();
  return payload;
}

json jset_json(const JSet& j, const Ground& g) {
  json out = json::array();
  for (Mask bottom : j.bottoms()) out.push_back(to_text(TwoOrder(g.size(), bottom), g));
  return out;
}

json check_wellgraded(const Ground& g, int cap) {
  std::vector<JSet> family;
  for (const WeakOrder& w : enumerate_weak_orders(g, cap))
    family.push_back(two_order_decomposition(w));
  const WellGradedReport report = verify_well_graded(family);
  json payload;
  payload["n"] = g.size();
  payload["family_size"] = family.size();
  payload["pairs_checked"] = report.pair_count;
  if (report.witness) {
    payload["witness"] =
        json::array({jset_json(report.witness->first, g), jset_json(report.witness->second, g)});
  }
  payload["passed"] = report.well_graded;
  return payload;
}

json check_medium(const Ground& g, int cap) {
  const MediumReport report = check_medium_axioms(g, cap);
  json payload;
  payload["n"] = g.size();
  payload["states"] = report.state_count;
  payload["tokens"] = report.token_count;
  json reverse = json::array();
  for (const auto& v : report.reverse_violations)
    reverse.push_back({{"from", to_text(v.from, g)},
                       {"to", to_text(v.to, g)},
                       {"token", to_text(v.token, g)}});
  payload["reverse_violations"] = std::move(reverse);
  json edges = json::array();
  for (const auto& v : report.edge_violations)
    edges.push_back(
        {{"from", to_text(v.from, g)}, {"to", to_text(v.to, g)}, {"tokens", v.token_count}});
  payload["edge_violations"] = std::move(edges);
  payload["connected"] = report.connected;
  payload["concise"] = report.concise;
  payload["passed"] = report.passed();
  return payload;
}

json check_complex(const Ground& g, int cap) {
  const int n = g.size();
  const HasseGraph h = build_hasse(g, cap);
  const CubicalComplex complex = build_cubical_complex(g, cap);

  long long factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;

  bool cubes_ok = static_cast<long long>(complex.maximal_cubes.size()) == factorial;
  for (const Cube& cube : complex.maximal_cubes) {
    cubes_ok = cubes_ok && cube.dimension == n - 1 &&
               cube.vertex_set.size() == (size_t{1} << (n - 1));
  }

  // Skeleton vs Hasse under the characteristic-vector bijection.
  bool skeleton_ok = complex.vertices.size() == h.vertices.size() &&
                     complex.skeleton_edges.size() == h.edges.size();
  if (skeleton_ok) {
    auto hasse_edges = h.edges;
    for (auto& [lo, hi] : hasse_edges)
      if (lo > hi) std::swap(lo, hi);
    std::sort(hasse_edges.begin(), hasse_edges.end());
    skeleton_ok = hasse_edges == complex.skeleton_edges;
  }

  // Simplicial closure: the facet closure is exactly the decomposition family.
  const SimplicialComplexJ simplicial = build_simplicial_J(g, cap);
  bool facet_sizes_ok = true;
  for (const JSet& facet : simplicial.facets)
    facet_sizes_ok = facet_sizes_ok && facet.size() == n - 1;
  std::vector<JSet> closure = all_faces(simplicial);
  std::vector<JSet> decompositions;
  for (const WeakOrder& w : h.vertices) decompositions.push_back(two_order_decomposition(w));
  std::sort(decompositions.begin(), decompositions.end(), [](const JSet& a, const JSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bottoms() < b.bottoms();
  });
  const bool closure_ok = closure == decompositions;

  json payload;
  payload["n"] = n;
  payload["maximal_cubes"] = complex.maximal_cubes.size();
  payload["expected_maximal_cubes"] = factorial;
  payload["cubes_ok"] = cubes_ok;
  payload["skeleton_vertices"] = complex.vertices.size();
  payload["skeleton_edges"] = complex.skeleton_edges.size();
  payload["hasse_edges"] = h.edges.size();
  payload["skeleton_isomorphic_to_hasse"] = skeleton_ok;
  payload["facets"] = simplicial.facets.size();
  payload["facet_sizes_ok"] = facet_sizes_ok;
  payload["closure_faces"] = closure.size();
  payload["weak_orders"] = h.vertices.size();
  payload["closure_matches_decompositions"] = closure_ok;
  payload["passed"] = cubes_ok && skeleton_ok && facet_sizes_ok && closure_ok;
  return payload;
}

json run_check_target(const std::string& target, const Ground& g, int cap) {
  if (target == "partial-cube") return check_partial_cube(g, cap);
  if (target == "wellgraded") return check_wellgraded(g, cap);
  if (target == "medium") return check_medium(g, cap);
  if (target == "complex") return check_complex(g, cap);
  throw std::invalid_argument("unknown check target '" + target +
                              "' (expected partial-cube, wellgraded, medium, or complex)");
}

// --- classify score parsing --------------------------------------------------

long long parse_integer(const std::string& text) {
  size_t used = 0;
  const long long value = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "'");
  return value;
}

long long pow10(int d) {
  long long p = 1;
  for (int i = 0; i < d; ++i) p *= 10;
  return p;
}

/// Scores are exact: integers or p/q rationals. Decimal literals are
/// rejected unless round_decimals is given, in which case every score is
/// scaled by 10^D and rounded to the nearest integer (scaling all scores by
/// the same factor preserves the induced order).
Rational parse_score(const std::string& raw, std::optional<int> round_decimals) {
  std::string text = raw;
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw std::invalid_argument("empty score");

  Rational value;
  const size_t slash = text.find('/');
  const size_t dot = text.find('.');
  if (slash != std::string::npos) {
    value = Rational(parse_integer(text.substr(0, slash)),
                     parse_integer(text.substr(slash + 1)));
  } else if (dot != std::string::npos) {
    if (!round_decimals)
      throw std::invalid_argument("floating-point score '" + text +
                                  "' requires --round-decimals");
    const bool negative = text[0] == '-';
    std::string digits = text;
    if (negative) digits.erase(0, 1);
    const size_t point = digits.find('.');
    const std::string whole = digits.substr(0, point);
    std::string frac = digits.substr(point + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bad score '" + text + "'");
    for (char c : whole + frac)
      if (c < '0' || c > '9') throw std::invalid_argument("bad score '" + text + "'");
    long long num = whole.empty() ? 0 : parse_integer(whole);
    long long den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(negative ? -num : num, den);
  } else {
    value = Rational(parse_integer(text));
  }

  if (round_decimals) {
    // Round value * 10^D half away from zero.
    const __int128 num = static_cast<__int128>(value.num) * pow10(*round_decimals);
    const __int128 den = value.den;
    const __int128 magnitude = (2 * (num < 0 ? -num : num) + den) / (2 * den);
    if (magnitude > static_cast<__int128>(1) << 62)
      throw std::invalid_argument("score '" + raw + "' overflows after scaling");
    value = Rational(static_cast<long long>(num < 0 ? -magnitude : magnitude));
  }
  return value;
}

}  // namespace

CommandResult cmd_enumerate(int n, std::optional<int> k, const std::string& format, int cap) {
  require_valid_n(n, cap);
  const Ground g(n);
  if (k && (*k < 1 || *k > n))
    throw wo_error(errc::bad_k, "k must be in [1, n]");
  const std::vector<WeakOrder> orders =
      k ? enumerate_by_classes(g, *k, cap) : enumerate_weak_orders(g, cap);

  if (format == "json") {
    json payload;
    payload["n"] = n;
    if (k) payload["k"] = *k;
    payload["count"] = orders.size();
    if (!k) {
      json by_classes = json::array();
      for (int classes = n; classes >= 1; --classes)
        by_classes.push_back(
            {{"k", classes}, {"count", enumerate_by_classes(g, classes, cap).size()}});
      payload["by_classes"] = std::move(by_classes);
    }
    json list = json::array();
    for (const WeakOrder& w : orders) list.push_back(to_text(w, g));
    payload["orders"] = std::move(list);
    json params{{"n", n}};
    if (k) params["k"] = *k;
    return {0, dump(document("enumerate", params, payload))};
  }
  if (format == "csv") {
    std::string out = "index,blocks,order\n";
    for (size_t i = 0; i < orders.size(); ++i)
      out += std::to_string(i) + "," + std::to_string(orders[i].block_count()) + "," +
             to_text(orders[i], g) + "\n";
    return {0, out};
  }
  if (format == "text") {
    std::string out;
    for (const WeakOrder& w : orders) out += to_text(w, g) + "\n";
    out += "# total: " + std::to_string(orders.size()) + "\n";
    return {0, out};
  }
  throw std::invalid_argument("enumerate: unknown format '" + format + "'");
}

CommandResult cmd_hasse(int n, const std::string& format, int cap) {
  require_valid_n(n, cap);
  const Ground g(n);
  const HasseGraph h = build_hasse(g, cap);

  if (format == "dot") {
    std::string out = "digraph WO {\n";
    for (size_t i = 0; i < h.vertices.size(); ++i)
      out += "  v" + std::to_string(i) + " [label=\"" + to_text(h.vertices[i], g) + "\"];\n";
    for (const auto& [lo, hi] : h.edges)
      out += "  v" + std::to_string(lo) + " -> v" + std::to_string(hi) + ";\n";
    out += "}\n";
    return {0, out};
  }
  if (format == "json") {
    json payload;
    payload["n"] = n;
    payload["vertex_count"] = h.vertices.size();
    payload["edge_count"] = h.edges.size();
    json vertices = json::array();
    for (const WeakOrder& w : h.vertices) vertices.push_back(to_text(w, g));
    payload["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [lo, hi] : h.edges) edges.push_back(json::array({lo, hi}));
    payload["edges"] = std::move(edges);
    return {0, dump(document("hasse", {{"n", n}}, payload))};
  }
  throw std::invalid_argument("hasse: unknown format '" + format + "'");
}

CommandResult cmd_check(const std::string& target, std::optional<int> n, bool slow, int cap) {
  json params{{"target", target}};
  json payload;
  bool passed = true;

  if (n) {
    require_valid_n(*n, cap);
    params["n"] = *n;
    payload = run_check_target(target, Ground(*n), cap);
    passed = payload.at("passed").get<bool>();
  } else {
    // Default sweep: n = 2..4, extended to 5 by --slow.
    const int max_n = slow ? 5 : 4;
    params["n_range"] = json::array({2, max_n});
    json runs = json::array();
    for (int size = 2; size <= max_n; ++size) {
      json run = run_check_target(target, Ground(size), cap);
      passed = passed && run.at("passed").get<bool>();
      runs.push_back(std::move(run));
    }
    payload["runs"] = std::move(runs);
    payload["passed"] = passed;
  }
  return {passed ? 0 : 1, dump(document("check", params, payload))};
}

CommandResult cmd_classify(const std::string& scores_csv, std::optional<int> round_decimals,
                           const std::string& format, int cap) {
  if (round_decimals && (*round_decimals < 0 || *round_decimals > 12))
    throw std::invalid_argument("--round-decimals must be in [0, 12]");
  const std::vector<std::string> parts = split_csv(scores_csv);
  const int n = static_cast<int>(parts.size());
  require_valid_n(n, cap);

  std::vector<Rational> scores;
  scores.reserve(parts.size());
  for (const std::string& part : parts) scores.push_back(parse_score(part, round_decimals));

  const Ground g(n);
  const WeakOrder order = from_function(std::span<const Rational>(scores));
  const std::string text = to_text(order, g);

  if (format == "text") return {0, text + "\n"};
  if (format == "json") {
    json params{{"scores", scores_csv}};
    if (round_decimals) params["round_decimals"] = *round_decimals;
    json payload;
    payload["n"] = n;
    payload["order"] = text;
    json values = json::array();
    for (const Rational& r : scores) values.push_back(json::array({r.num, r.den}));
    payload["values"] = std::move(values);
    return {0, dump(document("classify", params, payload))};
  }
  throw std::invalid_argument("classify: unknown format '" + format + "'");
}

CommandResult cmd_geometry(int n, const std::string& format, int cap) {
  require_valid_n(n, cap);
  if (n > 5) throw wo_error(errc::cap_exceeded, "geometry export is limited to n <= 5");
  const Ground g(n);
  const PermutahedronGeometry geo = permutahedron_geometry(g, cap);

  if (format == "json") {
    json payload;
    payload["n"] = n;
    json vertices = json::array();
    for (const auto& v : geo.vertices)
      vertices.push_back({{"order", to_text(v.order, g)}, {"point", point_json(v.point)}});
    payload["vertices"] = std::move(vertices);
    json cells = json::array();
    for (const auto& cell : geo.cells) {
      json barycenters = json::array();
      for (const auto& b : cell.barycenters)
        barycenters.push_back({{"order", to_text(b.order, g)}, {"point", point_json(b.point)}});
      cells.push_back({{"linear", to_text(cell.linear, g)},
                       {"barycenters", std::move(barycenters)}});
    }
    payload["cells"] = std::move(cells);
    return {0, dump(document("geometry", {{"n", n}}, payload))};
  }
  if (format == "off") {
    if (n > 4) throw wo_error(errc::cap_exceeded, "OFF export is limited to n <= 4");
    // Point cloud of all face barycenters plus the cube edges of every cell;
    // the union of those edges is exactly the Hasse edge set.
    const HasseGraph h = build_hasse(g, cap);
    std::string out = n == 3 ? "OFF\n" : ("nOFF\n" + std::to_string(n) + "\n");
    out += std::to_string(h.vertices.size()) + " " + std::to_string(h.edges.size()) + " 0\n";
    for (const WeakOrder& w : h.vertices) {
      std::string line;
      for (const Rational& r : barycenter(w)) {
        if (!line.empty()) line += ' ';
        line += r.den == 1 ? std::to_string(r.num) : (std::to_string(r.num / 2) + ".5");
      }
      out += line + "\n";
    }
    for (const auto& [lo, hi] : h.edges)
      out += "2 " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
    return {0, out};
  }
  throw std::invalid_argument("geometry: unknown format '" + format + "'");
}

CommandResult cmd_medium_walk(int n, const std::string& start_text,
                              const std::string& tokens_csv, int cap) {
  require_valid_n(n, cap);
  const Ground g(n);
  const WeakOrder start = parse_weak_order(start_text, g);
  std::vector<Token> tokens;
  if (!tokens_csv.empty())
    for (const std::string& part : split_csv(tokens_csv)) tokens.push_back(parse_token(part, g));

  const WalkTrace trace = walk(start, tokens);
  json payload;
  payload["n"] = n;
  payload["start"] = to_text(trace.start, g);
  json steps = json::array();
  for (const WalkStep& step : trace.steps)
    steps.push_back({{"token", to_text(step.token, g)},
                     {"effective", step.effective},
                     {"state", to_text(step.state, g)}});
  payload["steps"] = std::move(steps);
  payload["final"] = to_text(trace.final_state(), g);
  return {0, dump(document("medium walk", {{"n", n}, {"start", start_text}, {"tokens", tokens_csv}},
                           payload))};
}

}  // namespace woc::cli
