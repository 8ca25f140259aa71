#include "fatpoints/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fatpoints/resol.hpp"
#include "fatpoints/schemefile.hpp"
#include "fatpoints/separator.hpp"

namespace fatpoints {

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::Ideal, "ideal"},       {Command::Degree, "degree"},         {Command::Hilbert, "hilbert"},
    {Command::Separators, "separators"}, {Command::GoodCheck, "good-check"}, {Command::Acm, "acm"},
    {Command::Resolution, "resolution"}, {Command::Verify, "verify"},
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(Bidegree d) { return json::array({d.d1, d.d2}); }

json to_json(const std::vector<Bidegree>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

json to_json(const std::vector<Polynomial>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

json to_json(const HilbertTable& h) {
  json rows = json::array();
  for (const auto& row : h.values) rows.push_back(row);
  return json{{"rect", to_json(h.rect)}, {"values", rows}};
}

json to_json(const Resolution& res) {
  json modules = json::array();
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    json shifts = json::array();
    for (const auto& [d, c] : shift_counts(res.modules[i])) shifts.push_back({{"shift", to_json(d)}, {"count", c}});
    modules.push_back({{"index", i}, {"rank", res.rank(i)}, {"shifts", shifts}});
  }
  return json{{"length", res.length()}, {"modules", modules}};
}

std::string join(const std::vector<Bidegree>& ds) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i];
  os << ')';
  return os.str();
}

void render_table(std::ostream& os, const HilbertTable& h) {
  std::size_t width = 1;
  for (const auto& row : h.values)
    for (auto v : row) width = std::max(width, std::to_string(v).size());
  for (const auto& row : h.values) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << std::setw(static_cast<int>(width)) << row[j];
    os << '\n';
  }
}

void render_resolution(std::ostream& os, const Resolution& res) {
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    os << "  F" << i << "  rank " << res.rank(i) << ":";
    for (const auto& [d, c] : shift_counts(res.modules[i])) {
      os << ' ' << d;
      if (c > 1) os << '^' << c;
    }
    os << '\n';
  }
}

const char* const kPass = "PASS";
const char* const kFail = "FAIL";
const char* const kSkipped = "SKIPPED(hypothesis)";

class Session {
 public:
  Session(const RunConfig& config, FatPointScheme z)
      : config_(config), analysis_(std::move(z)), rng_(config.seed) {}

  const FatPointScheme& scheme() const { return analysis_.scheme(); }
  const FatPointAnalysis& analysis() const { return analysis_; }
  std::mt19937_64& rng() { return rng_; }

  bool has_point() const { return config_.point.has_value(); }

  std::size_t point_index() const {
    if (!config_.point) throw UsageError(command_name(config_.command) + " needs --point");
    return checked(*config_.point);
  }

  std::size_t checked(std::size_t one_based) const {
    if (one_based < 1 || one_based > scheme().size())
      throw UsageError("--point must be between 1 and " + std::to_string(scheme().size()));
    return one_based - 1;
  }

  Bidegree rect() const { return config_.rect ? *config_.rect : default_rectangle(analysis_); }

 private:
  const RunConfig& config_;
  FatPointAnalysis analysis_;
  std::mt19937_64 rng_;
};

struct Output {
  json doc;
  std::ostringstream text;
  int exit_code = kExitOk;
};

json scheme_json(const FatPointScheme& z) {
  const Field& k = z.ring().field();
  json points = json::array();
  for (const auto& item : z.items()) {
    json x = json::array(), y = json::array();
    for (const auto& c : item.point.a()) x.push_back(k.to_string(c));
    for (const auto& c : item.point.b()) y.push_back(k.to_string(c));
    points.push_back({{"x", x}, {"y", y}, {"mult", item.multiplicity}});
  }
  return json{{"n", z.ring().n()}, {"m", z.ring().m()}, {"points", points}};
}

void cmd_ideal(Session& s, Output& out) {
  const Ideal& iz = s.analysis().ideal();
  const auto gens = minimal_generators(iz);
  std::vector<Bidegree> degrees;
  for (const auto& g : gens) degrees.push_back(*g.bidegree());
  out.doc["ideal"] = {{"generators", to_json(gens)}, {"degrees", to_json(degrees)},
                      {"groebner_size", iz.groebner().size()}};
  out.text << "I_Z: " << gens.size() << " minimal generators\n";
  for (std::size_t i = 0; i < gens.size(); ++i) out.text << "  " << degrees[i] << "  " << gens[i] << '\n';
}

void cmd_degree(Session& s, Output& out) {
  const long long deg = scheme_degree(s.scheme());
  json body{{"degree", deg}};
  out.text << "deg Z = " << deg << '\n';
  if (!s.scheme().empty()) {
    const Bidegree corner = stabilization_corner(s.analysis().ideal());
    const long long h = s.analysis().ideal().quotient_dim(corner);
    body["stabilization_corner"] = to_json(corner);
    body["hilbert_at_corner"] = h;
    out.text << "H_Z" << corner << " = " << h << '\n';
  }
  if (s.has_point()) {
    const std::size_t i = s.point_index();
    const auto d = degree_of_point(s.analysis(), i);
    body["degree_of_point"] = to_json(d);
    out.text << "deg_Z(P_" << i + 1 << ") = " << join(d) << '\n';
  }
  out.doc["degree"] = body;
}

void cmd_hilbert(Session& s, Output& out) {
  const HilbertTable h = hilbert_function(s.analysis().ideal(), s.rect());
  out.doc["hilbert"] = to_json(h);
  out.text << "H_Z on [0," << h.rect.d1 << "] x [0," << h.rect.d2 << "], row i = x-degree:\n";
  render_table(out.text, h);
}

void cmd_separators(Session& s, Output& out) {
  const std::size_t i = s.point_index();
  const SeparatorSet& sep = s.analysis().separators(i);
  out.doc["separators"] = {{"point", i + 1}, {"polys", to_json(sep.polys)}, {"degrees", to_json(sep.degrees)}};
  out.text << "minimal separators of P_" << i + 1 << ": " << sep.polys.size() << '\n';
  for (std::size_t j = 0; j < sep.polys.size(); ++j) out.text << "  " << sep.degrees[j] << "  " << sep.polys[j] << '\n';
  out.text << "deg_Z(P_" << i + 1 << ") = " << join(sep.degrees) << '\n';
}

json dependence_json(const Dependence& d, const Field& k) {
  json coeffs = json::array();
  for (const auto& c : d.coefficients) coeffs.push_back(k.to_string(c));
  return json{{"degree", to_json(d.degree)}, {"indices", d.indices}, {"coefficients", coeffs},
              {"relation", d.relation.to_string()}};
}

void cmd_good_check(Session& s, Output& out) {
  const std::size_t i = s.point_index();
  const SeparatorSet& sep = s.analysis().separators(i);
  GoodSetResult r;
  try {
    r = is_good_set(s.analysis(), i, sep);
  } catch (const PreconditionError& e) {
    out.doc["good_check"] = {{"point", i + 1}, {"error", e.what()}};
    out.text << "good-set check not applicable: " << e.what() << '\n';
    out.exit_code = kExitHypothesis;
    return;
  }
  json body{{"point", i + 1}, {"good", r.good}, {"separators", to_json(sep.polys)}};
  out.text << "minimal separators of P_" << i + 1 << " are " << (r.good ? "" : "not ") << "a good set\n";
  if (r.witness) {
    body["witness"] = dependence_json(*r.witness, s.scheme().ring().field());
    out.text << "  dependence in degree " << r.witness->degree << ": " << r.witness->relation << " in I_Z\n";
  }
  out.doc["good_check"] = body;
}

json acm_json(const AcmReport& r) {
  json body{{"is_acm", r.is_acm}, {"depth_lower_bound", r.depth_lower_bound}, {"trials", r.trials}};
  if (r.witness) body["witness"] = {r.witness->first.to_string(), r.witness->second.to_string()};
  return body;
}

void cmd_acm(Session& s, Output& out) {
  if (s.scheme().empty()) throw UsageError("acm needs a nonempty scheme");
  const AcmReport r = acm_check(s.analysis(), kDefaultAcmTrials, s.rng());
  const std::size_t pd = pdim(s.analysis().ideal());
  json body = acm_json(r);
  body["pdim"] = pd;
  out.doc["acm"] = body;
  out.text << (r.is_acm ? "ACM" : "not certified ACM") << " (" << r.trials << " trials)\n";
  if (r.witness) out.text << "  regular sequence: " << r.witness->first << ", " << r.witness->second << '\n';
  out.text << "pdim R/I_Z = " << pd << '\n';
}

void cmd_resolution(Session& s, Output& out) {
  if (s.scheme().empty()) throw UsageError("resolution needs a nonempty scheme");
  const Resolution res = minimal_free_resolution(s.analysis().ideal());
  out.doc["resolution"] = to_json(res);
  out.text << "minimal free resolution of R/I_Z, length " << res.length() << ":\n";
  render_resolution(out.text, res);
}

class Verifier {
 public:
  Verifier(Session& s, Output& out) : s_(s), out_(out) {}

  void run() {
    if (s_.scheme().empty()) throw UsageError("verify needs a nonempty scheme");
    const FatPointAnalysis& z = s_.analysis();
    const Ring& ring = s_.scheme().ring();
    const int big_n = ring.n() + ring.m();
    const Bidegree rect = s_.rect();

    const AcmReport acm = acm_check(z, kDefaultAcmTrials, s_.rng());
    add("acm_check", std::nullopt, kPass, acm_json(acm), acm.is_acm ? "ACM" : "not certified ACM");

    const Resolution res = minimal_free_resolution(z.ideal());
    const bool pdim_n = res.length() == static_cast<std::size_t>(big_n);
    add("pdim_matches_acm", std::nullopt, pdim_n == acm.is_acm ? kPass : kFail,
        {{"pdim", res.length()}, {"N", big_n}, {"is_acm", acm.is_acm}}, "pdim " + std::to_string(res.length()));
    add("resolution_is_minimal_complex", std::nullopt, is_complex(res) && degrees_consistent(res) ? kPass : kFail,
        to_json(res));

    const HilbertTable h = hilbert_function(z.ideal(), rect);
    bool betti_ok = true;
    for (int a = 0; a <= rect.d1; ++a)
      for (int b = 0; b <= rect.d2; ++b) betti_ok = betti_ok && hilbert_from_betti(res, {a, b}) == h.at(a, b);
    add("hilbert_from_betti", std::nullopt, betti_ok ? kPass : kFail, to_json(h));
    add("hilbert_stabilizes_at_degree", std::nullopt, h.at(rect.d1, rect.d2) == scheme_degree(s_.scheme()) ? kPass : kFail,
        {{"corner", to_json(rect)}, {"value", h.at(rect.d1, rect.d2)}, {"degree", scheme_degree(s_.scheme())}});
    oracle_check(rect);

    // Separator checks run in coordinates where the regular sequence is x_0, y_0.
    std::optional<FatPointAnalysis> normalized;
    if (acm.witness) normalized.emplace(normalize_coordinates(s_.scheme(), acm.witness->first, acm.witness->second).scheme);
    const FatPointAnalysis& work = normalized ? *normalized : z;

    std::vector<std::size_t> points;
    if (config_point()) points.push_back(*config_point());
    else
      for (std::size_t i = 0; i < s_.scheme().size(); ++i) points.push_back(i);
    for (auto i : points) point_checks(z, work, i, acm.is_acm, rect);

    if (!acm.is_acm) {
      add("rank_bound_check", std::nullopt, kSkipped, {{"reason", "Z is not certified ACM"}});
    } else {
      try {
        const bool ok = rank_bound_check(z, kDefaultAcmTrials, s_.rng());
        add("rank_bound_check", std::nullopt, ok ? kPass : kFail,
            {{"rank_F_N", res.rank(static_cast<std::size_t>(big_n))},
             {"bound", binomial(s_.scheme().max_multiplicity() + big_n - 2, big_n - 1)}});
      } catch (const PreconditionError& e) {
        add("rank_bound_check", std::nullopt, kSkipped, {{"reason", e.what()}});
      }
    }
  }

  std::optional<std::size_t> config_point() const { return point_; }
  void set_point(std::optional<std::size_t> p) { point_ = p; }

 private:
  void add(std::string name, std::optional<std::size_t> point, const char* verdict, json data,
           const std::string& note = "") {
    if (std::string(verdict) == kFail) out_.exit_code = kExitCheckFailed;
    json entry{{"check", name}};
    if (point) entry["point"] = *point + 1;
    entry["verdict"] = verdict;
    entry["data"] = std::move(data);
    out_.doc["checks"].push_back(std::move(entry));
    out_.text << std::left << std::setw(20) << verdict << ' ' << name;
    if (point) out_.text << " [P_" << *point + 1 << "]";
    if (!note.empty()) out_.text << "  " << note;
    out_.text << '\n';
  }

  void oracle_check(Bidegree rect) {
    const FatPointAnalysis& z = s_.analysis();
    try {
      bool ok = true;
      for (int a = 0; a <= rect.d1 && ok; ++a)
        for (int b = 0; b <= rect.d2 && ok; ++b) {
          const long long gb = dim_bigraded_piece({a, b}, s_.scheme().ring()) - z.ideal().quotient_dim({a, b});
          ok = gb == ideal_piece_dim_oracle(s_.scheme(), {a, b});
        }
      add("oracle_equivalence", std::nullopt, ok ? kPass : kFail, {{"rect", to_json(rect)}});
    } catch (const CharacteristicError& e) {
      add("oracle_equivalence", std::nullopt, kSkipped, {{"reason", e.what()}});
    }
  }

  void point_checks(const FatPointAnalysis& z, const FatPointAnalysis& work, std::size_t i, bool is_acm, Bidegree rect) {
    const SeparatorSet& sep = z.separators(i);
    bool all_separate = true;
    for (const auto& f : sep.polys) all_separate = all_separate && is_separator(f, z, i);
    add("minimal_separators", i, all_separate ? kPass : kFail,
        {{"polys", to_json(sep.polys)}, {"degrees", to_json(sep.degrees)}}, join(sep.degrees));

    const SeparatorSet& wsep = work.separators(i);
    add("degree_invariance", i, wsep.degrees == sep.degrees ? kPass : kFail, {{"degrees", to_json(wsep.degrees)}});

    const bool not_acm = not_acm_from_degree(z, i);
    add("not_acm_from_degree", i, is_acm && not_acm ? kFail : kPass,
        {{"count", sep.degrees.size()},
         {"degree_difference", scheme_degree(z.scheme()) - scheme_degree(z.residual(i))},
         {"certifies_not_acm", not_acm}});

    std::optional<bool> good;
    try {
      const GoodSetResult r = is_good_set(work, i, wsep);
      good = r.good;
      json data{{"good", r.good}};
      if (r.witness) data["witness"] = dependence_json(*r.witness, z.scheme().ring().field());
      const char* verdict = r.good ? kPass : (is_acm ? kFail : kSkipped);
      add("is_good_set", i, verdict, std::move(data), r.good ? "good" : "not good");
    } catch (const PreconditionError& e) {
      add("is_good_set", i, kSkipped, {{"reason", e.what()}}, e.what());
    }

    if (good.value_or(false)) {
      add("separator_count_check", i, separator_count_check(work, i) ? kPass : kFail,
          {{"count", wsep.degrees.size()}});
      add("hilbert_relation_check", i, hilbert_relation_check(work, i, rect) ? kPass : kFail,
          {{"rect", to_json(rect)}});
    } else {
      add("separator_count_check", i, kSkipped, {{"reason", "separators are not a good set"}});
      add("hilbert_relation_check", i, kSkipped, {{"reason", "separators are not a good set"}});
    }

    if (is_acm && good.value_or(false))
      add("separator_colon_check", i, separator_colon_check(work, i) ? kPass : kFail, json::object());
    else
      add("separator_colon_check", i, kSkipped, {{"reason", "needs ACM Z and a good separator set"}});

    if (!is_acm) {
      add("last_syzygy_separator_check", i, kSkipped, {{"reason", "Z is not certified ACM"}});
      return;
    }
    try {
      const bool ok = last_syzygy_separator_check(z, i, kDefaultAcmTrials, s_.rng());
      std::vector<Bidegree> expected;
      const Ring& ring = z.scheme().ring();
      for (const auto& d : sep.degrees) expected.push_back(d + Bidegree{ring.n(), ring.m()});
      add("last_syzygy_separator_check", i, ok ? kPass : kFail, {{"expected_shifts", to_json(expected)}});
    } catch (const PreconditionError& e) {
      add("last_syzygy_separator_check", i, kSkipped, {{"reason", e.what()}});
    }
  }

  Session& s_;
  Output& out_;
  std::optional<std::size_t> point_;
};

}  // namespace

Bidegree default_rectangle(const FatPointAnalysis& z) {
  Bidegree d{0, 0};
  for (std::size_t i = 0; i < z.scheme().size(); ++i)
    for (const auto& s : z.separators(i).degrees) d = componentwise_max(d, s);
  d = d + Bidegree{2, 2};
  if (!z.scheme().empty()) d = componentwise_max(d, stabilization_corner(z.ideal()) + Bidegree{1, 1});
  return d;
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommandNames)
    if (name == n) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [cmd, n] : kCommandNames)
    if (cmd == c) return n;
  return "?";
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    std::optional<Field> field;
    if (config.field) {
      try {
        field = parse_field_spec(*config.field);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    FatPointScheme z = parse_scheme_file(config.scheme_file, field);
    Session s(config, std::move(z));

    Output out;
    json inputs{{"command", command_name(config.command)}, {"scheme_file", config.scheme_file}};
    inputs["point"] = config.point ? json(*config.point) : json(nullptr);
    inputs["rect"] = config.rect ? to_json(*config.rect) : json(nullptr);
    inputs["seed"] = config.seed;
    inputs["field"] = s.scheme().ring().field().name();
    out.doc["inputs"] = inputs;
    out.doc["scheme"] = scheme_json(s.scheme());
    out.text << "field " << s.scheme().ring().field().name() << ", P^" << s.scheme().ring().n() << " x P^"
             << s.scheme().ring().m() << ", " << s.scheme().size() << " points\n";

    switch (config.command) {
      case Command::Ideal: cmd_ideal(s, out); break;
      case Command::Degree: cmd_degree(s, out); break;
      case Command::Hilbert: cmd_hilbert(s, out); break;
      case Command::Separators: cmd_separators(s, out); break;
      case Command::GoodCheck: cmd_good_check(s, out); break;
      case Command::Acm: cmd_acm(s, out); break;
      case Command::Resolution: cmd_resolution(s, out); break;
      case Command::Verify: {
        out.doc["checks"] = json::array();
        Verifier v(s, out);
        if (config.point) v.set_point(s.checked(*config.point));
        v.run();
        break;
      }
    }
    result.exit_code = out.exit_code;
    result.output = config.format == OutputFormat::Json ? out.doc.dump(2) + "\n" : out.text.str();
  } catch (const UsageError& e) {
    result = {kExitUsage, "", e.what()};
  } catch (const SchemeFileError& e) {
    result = {kExitUsage, "", e.what()};
  } catch (const ArithmeticError& e) {
    result = {kExitUsage, "", e.what()};
  } catch (const std::invalid_argument& e) {
    result = {kExitUsage, "", e.what()};
  } catch (const PreconditionError& e) {
    result = {kExitHypothesis, "", e.what()};
  }
  return result;
}

}  // namespace fatpoints
