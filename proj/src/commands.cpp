#include "hsimplex/commands.hpp"

#include <algorithm>
#include <sstream>

#include "hsimplex/face_lattice.hpp"
#include "hsimplex/growth.hpp"
#include "hsimplex/json_io.hpp"
#include "hsimplex/matrix.hpp"
#include "hsimplex/toric_h.hpp"

namespace hsimplex {

std::string to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::toric_h: return "toric_h";
    case RecordKind::chow_betti: return "chow_betti";
    case RecordKind::coordinator: return "coordinator";
    case RecordKind::table_row: return "table_row";
    case RecordKind::verify: return "verify";
  }
  return "?";
}

RecordKind parse_record_kind(const std::string& s) {
  for (auto kind : {RecordKind::toric_h, RecordKind::chow_betti, RecordKind::coordinator, RecordKind::table_row,
                    RecordKind::verify})
    if (to_string(kind) == s) return kind;
  throw InvalidParameters("unknown record kind '" + s + "'");
}

std::string to_string(Method method) {
  switch (method) {
    case Method::formula: return "formula";
    case Method::recursion: return "recursion";
    case Method::rank: return "rank";
    case Method::bfs: return "bfs";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  for (auto m : {Method::formula, Method::recursion, Method::rank, Method::bfs})
    if (to_string(m) == s) return m;
  throw UsageError("unknown method '" + s + "' (expected formula|recursion|rank|bfs)");
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected text|csv|json)");
}

nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json j{{"kind", to_string(rec.kind)},
                   {"params", {{"k", rec.k}, {"n", rec.n}, {"r", rec.r ? nlohmann::json(*rec.r) : nlohmann::json()}}},
                   {"values", big_to_json(rec.values)},
                   {"method", rec.method},
                   {"status", rec.ok ? "ok" : "mismatch"}};
  if (!rec.label.empty()) j["label"] = rec.label;
  if (!rec.extra.empty()) {
    nlohmann::json extra = nlohmann::json::object();
    for (const auto& [name, seq] : rec.extra) extra[name] = big_to_json(seq);
    j["extra"] = std::move(extra);
  }
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  rec.kind = parse_record_kind(j.at("kind").get<std::string>());
  const auto& params = j.at("params");
  rec.k = params.at("k").get<int>();
  rec.n = params.at("n").get<int>();
  if (!params.at("r").is_null()) rec.r = params.at("r").get<int>();
  rec.values = bigs_from_json(j.at("values"));
  rec.method = j.at("method").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status != "ok" && status != "mismatch") throw InvalidParameters("record status must be ok|mismatch");
  rec.ok = status == "ok";
  if (rec.ok && rec.values.empty()) throw InvalidParameters("record with status ok must carry values");
  if (j.contains("label")) rec.label = j.at("label").get<std::string>();
  if (j.contains("extra"))
    for (const auto& [name, seq] : j.at("extra").items()) rec.extra[name] = bigs_from_json(seq);
  return rec;
}

std::string csv_header() { return "kind,k,n,r,method,values,status"; }

std::string to_csv(const OutputRecord& rec) {
  std::string values = join(rec.values);
  if (rec.kind == RecordKind::table_row) values += " | " + join(rec.extra.at("chow_betti"));
  std::ostringstream out;
  out << to_string(rec.kind) << ',' << rec.k << ',' << rec.n << ',' << (rec.r ? std::to_string(*rec.r) : "") << ','
      << rec.method << ',' << values << ',' << (rec.ok ? "ok" : "mismatch");
  return out.str();
}

std::string to_text(const OutputRecord& rec) {
  std::string line;
  switch (rec.kind) {
    case RecordKind::table_row:
      line = std::to_string(rec.k) + ", " + std::to_string(rec.n) + " | " + join(rec.values) + " | " +
             join(rec.extra.at("chow_betti"));
      break;
    case RecordKind::verify:
      line = (rec.ok ? "PASS " : "FAIL ") + rec.label;
      break;
    default:
      if (auto it = rec.extra.find("S"); it != rec.extra.end())
        line = "S: " + join(it->second) + "\nh: " + join(rec.values);
      else
        line = join(rec.values);
  }
  if (!rec.ok && rec.kind != RecordKind::verify) line += "  [mismatch]";
  return line;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
  switch (format) {
    case Format::text:
      for (const auto& r : records) out << to_text(r) << '\n';
      break;
    case Format::csv:
      out << csv_header() << '\n';
      for (const auto& r : records) out << to_csv(r) << '\n';
      break;
    case Format::json: {
      if (records.size() == 1) {
        out << to_json(records.front()).dump() << '\n';
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        out << arr.dump(1) << '\n';
      }
      break;
    }
  }
}

int normalize_k(int k, int n) { return 2 * k > n ? n - k : k; }

namespace {

void require_hypersimplex(int k, int n) {
  if (n < 2 || n > 31) throw UsageError("n must lie in [2, 31]");
  if (k < 1 || k > n - 1) throw UsageError("k must lie in [1, n-1]");
}

RankMode effective_mode(int n, RankMode mode, bool force) {
  return (n > 8 && mode == RankMode::exact && !force) ? RankMode::mod_p : mode;
}

}  // namespace

OutputRecord cmd_toric_h(int k, int n, Method method) {
  require_hypersimplex(k, n);
  OutputRecord rec;
  rec.kind = RecordKind::toric_h;
  rec.k = k;
  rec.n = n;
  const HVector formula = toric_h_formula(normalize_k(k, n), n);
  if (method == Method::formula) {
    rec.values = formula.entries;
  } else if (method == Method::recursion) {
    rec.values = toric_h_vector(dualize(hypersimplex_face_poset(k, n))).entries;
    rec.method = "oracle";
    rec.ok = rec.values == formula.entries;
  } else {
    throw UsageError("toric-h supports --method formula|recursion");
  }
  return rec;
}

OutputRecord cmd_chow_betti(int k, int n, std::optional<int> r, Method method, RankMode mode, std::uint32_t prime,
                            bool force) {
  require_hypersimplex(k, n);
  if (r && (*r < 0 || *r > n - 1)) throw UsageError("r must lie in [0, n-1]");
  if (method != Method::formula && method != Method::rank)
    throw UsageError("chow-betti supports --method formula|rank");
  if (method == Method::rank && mode == RankMode::exact && n > 8 && !force)
    throw UsageError("exact ranks above n = 8 are slow; use --mode modp or pass --force");
  OutputRecord rec;
  rec.kind = RecordKind::chow_betti;
  rec.k = k;
  rec.n = n;
  rec.r = r;
  const int kk = normalize_k(k, n);
  const int lo = r ? *r : 0;
  const int hi = r ? *r : n - 1;
  std::vector<BigInt> formula;
  for (int c = lo; c <= hi; ++c) formula.push_back(chow_betti_formula(c, kk, n));
  if (method == Method::formula) {
    rec.values = formula;
  } else {
    for (int c = lo; c <= hi; ++c) rec.values.push_back(chow_betti_oracle(c, k, n, mode, prime));
    rec.method = "oracle";
    rec.ok = rec.values == formula;
  }
  return rec;
}

OutputRecord cmd_coordinator(int n, Method method, int kmax) {
  if (n < 2 || n > 16) throw UsageError("n must lie in [2, 16]");
  OutputRecord rec;
  rec.kind = RecordKind::coordinator;
  rec.n = n;
  const auto formula = coordinator_formula(n).padded(n);
  if (method == Method::formula) {
    rec.values = formula;
  } else if (method == Method::bfs) {
    if (kmax < 0) kmax = n + 2;
    if (kmax < n - 1) throw UsageError("--kmax must be at least n-1 to determine the coordinator polynomial");
    const auto seq = coordination_sequence(n, kmax);
    rec.values = coordinator_from_sequence(n, seq).padded(n);
    rec.extra["S"] = seq.values;
    rec.method = "oracle";
    rec.ok = rec.values == formula;
  } else {
    throw UsageError("coordinator supports --method formula|bfs");
  }
  return rec;
}

std::vector<OutputRecord> cmd_table(int max_n, Method method, RankMode mode, std::uint32_t prime) {
  if (max_n < 4 || max_n > 10) throw UsageError("--max-n must lie in [4, 10]");
  if (method == Method::bfs) throw UsageError("table supports --method formula|recursion|rank");
  std::vector<OutputRecord> rows;
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 2; 2 * k <= n; ++k) {
      OutputRecord rec;
      rec.kind = RecordKind::table_row;
      rec.k = k;
      rec.n = n;
      const auto h = toric_h_formula(k, n).entries;
      const auto b = chow_betti_formula_all(k, n);
      if (method == Method::formula) {
        rec.values = h;
        rec.extra["chow_betti"] = b;
      } else {
        rec.method = "oracle";
        rec.values = toric_h_vector(dualize(hypersimplex_face_poset(k, n))).entries;
        std::vector<BigInt> betti;
        for (int r = 0; r < n; ++r) betti.push_back(chow_betti_oracle(r, k, n, effective_mode(n, mode, false), prime));
        rec.extra["chow_betti"] = betti;
        rec.ok = rec.values == h && betti == b;
      }
      rows.push_back(std::move(rec));
    }
  }
  return rows;
}

std::string table_text(const std::vector<OutputRecord>& rows) {
  std::string out;
  for (const auto& r : rows) out += to_text(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// verify

bool VerifyReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const CheckFamily& f) { return f.passed(); });
}

std::vector<OutputRecord> VerifyReport::records(int max_n) const {
  std::vector<OutputRecord> out;
  for (const auto& f : families) {
    OutputRecord rec;
    rec.kind = RecordKind::verify;
    rec.n = max_n;
    rec.values = {BigInt(static_cast<unsigned long>(f.instances)), BigInt(static_cast<unsigned long>(f.failures.size()))};
    rec.method = "oracle";
    rec.ok = f.passed();
    rec.label = f.name + " (" + std::to_string(f.instances) + " instances)";
    for (const auto& failure : f.failures) rec.label += "; " + failure;
    out.push_back(std::move(rec));
  }
  return out;
}

BranchShift parse_fault(const std::string& spec) {
  const auto sep = spec.find_first_of(":=");
  if (sep == std::string::npos) throw UsageError("fault spec must look like name:+1");
  const std::string name = spec.substr(0, sep);
  int delta = 0;
  try {
    delta = std::stoi(spec.substr(sep + 1));
  } catch (const std::exception&) {
    throw UsageError("fault spec offset must be an integer");
  }
  BranchShift s;
  if (name == "toric_first") s.toric_first = delta;
  else if (name == "toric_middle") s.toric_middle = delta;
  else if (name == "chow_first") s.chow_first = delta;
  else if (name == "chow_last") s.chow_last = delta;
  else if (name == "coord_split") s.coord_split = delta;
  else throw UsageError("unknown fault '" + name + "' (toric_first|toric_middle|chow_first|chow_last|coord_split)");
  return s;
}

namespace {

std::string rkn(int r, int k, int n) {
  return "r=" + std::to_string(r) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}
std::string kn(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

class Sweep {
 public:
  Sweep(VerifyReport& report, std::ostream* log) : report_(report), log_(log) {}

  CheckFamily& begin(const std::string& name) {
    report_.families.push_back({name, 0, {}});
    return report_.families.back();
  }

  void check(CheckFamily& f, bool ok, const std::string& instance, const std::string& detail = {}) {
    ++f.instances;
    if (!ok) f.failures.push_back(detail.empty() ? instance : instance + ": " + detail);
  }

  void end(const CheckFamily& f) {
    if (!log_) return;
    *log_ << (f.passed() ? "PASS  " : "FAIL  ") << f.name << " (" << f.instances << " instances";
    if (!f.passed()) *log_ << ", " << f.failures.size() << " failed";
    *log_ << ")\n";
    for (const auto& failure : f.failures) *log_ << "      FAIL " << failure << '\n';
    log_->flush();
  }

 private:
  VerifyReport& report_;
  std::ostream* log_;
};

bool symmetric(const std::vector<BigInt>& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

// 1 = h_0 <= h_1 <= ... <= h_{floor((d-1)/2)}
bool unimodal_first_half(const std::vector<BigInt>& h) {
  if (h.empty() || h[0] != 1) return false;
  const int d = static_cast<int>(h.size()) - 1;
  for (int i = 1; i <= (d - 1) / 2; ++i)
    if (h[i] < h[i - 1]) return false;
  return true;
}

BigInt sum(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

std::string vs(const char* a, const std::vector<BigInt>& x, const char* b, const std::vector<BigInt>& y) {
  return std::string(a) + " [" + join(x) + "], " + b + " [" + join(y) + "]";
}

}  // namespace

VerifyReport cmd_verify(const VerifyOptions& opt, std::ostream* log) {
  if (opt.max_n < 2 || opt.max_n > 12) throw UsageError("--max-n must lie in [2, 12]");
  VerifyReport report;
  report.families.reserve(32);
  Sweep sweep(report, log);
  const int N = opt.max_n;
  const BranchShift& shift = opt.shift;

  {
    auto& f = sweep.begin("linalg.set_inclusion_rank");
    for (int n = 1; n <= std::min(N, 8); ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j && i + j <= n; ++i) {
          const auto rank = rank_exact(set_inclusion_matrix(i, j, n));
          sweep.check(f, binomial(n, i) == static_cast<unsigned long>(rank),
                      "i=" + std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n),
                      "rank " + std::to_string(rank));
        }
    sweep.end(f);
  }
  {
    auto& f = sweep.begin("linalg.modp_matches_exact");
    for (int n = 2; n <= std::min(N, 6); ++n)
      for (int k = 1; 2 * k <= n; ++k)
        for (int r = 1; r < n; ++r) {
          const auto m = balancing_matrix(enumerate_cones(r, k, n));
          const auto a = rank_exact(m), b = rank_mod_p(m, opt.prime);
          sweep.check(f, a == b, rkn(r, k, n), "exact " + std::to_string(a) + ", mod p " + std::to_string(b));
        }
    sweep.end(f);
  }

  // Face lattices.
  {
    auto& f = sweep.begin("face_lattice.eulerian");
    for (int n = 2; n <= std::min(N, 6); ++n)
      for (int k = 1; k < n; ++k) {
        const auto L = hypersimplex_face_poset(k, n);
        sweep.check(f, is_eulerian(L), kn(k, n) + " primal");
        sweep.check(f, is_eulerian(dualize(L)), kn(k, n) + " dual");
      }
    sweep.end(f);
  }
  {
    auto& fr = sweep.begin("face_lattice.dual_f_reversed");
    for (int n = 2; n <= std::min(N, 7); ++n)
      for (int k = 1; k < n; ++k) {
        const auto L = hypersimplex_face_poset(k, n);
        auto primal = f_vector(L);
        std::reverse(primal.begin(), primal.end());
        const auto dual = f_vector(dualize(L));
        sweep.check(fr, primal == dual, kn(k, n), vs("reversed primal", primal, "dual", dual));
      }
    sweep.end(fr);
  }
  {
    auto& f = sweep.begin("face_lattice.f_closed_form");
    for (int n = 2; n <= std::min(N, 8); ++n)
      for (int k = 1; 2 * k <= n; ++k) {
        const auto fv = f_vector(dualize(hypersimplex_face_poset(k, n)));
        for (int r = 0; r <= k - 2; ++r) {
          BigInt expected = binomial(n, r + 1);
          expected <<= (r + 1);
          sweep.check(f, fv[r] == expected, rkn(r, k, n),
                      "counted " + fv[r].get_str() + ", closed form " + expected.get_str());
        }
      }
    sweep.end(f);
  }
  {
    auto& fe = sweep.begin("face_lattice.euler_relation");
    auto& fq = sweep.begin("face_lattice.quasi_simplicial");
    for (int n = 2; n <= std::min(N, 7); ++n)
      for (int k = 1; k < n; ++k) {
        const auto L = hypersimplex_face_poset(k, n);
        const auto fv = f_vector(L);
        BigInt alt = 0;
        for (std::size_t r = 0; r < fv.size(); ++r) alt += (r % 2 ? -fv[r] : fv[r]);
        sweep.check(fe, alt == 1 - ((n - 1) % 2 ? -1 : 1), kn(k, n), "alternating sum " + alt.get_str());
        if (n < 3) continue;
        bool ok = true;
        for (std::size_t e = 0; e < L.size(); ++e) {
          if (L.rank(e) != 2) continue;
          const auto& up = L.upper_covers(e);
          const auto rank3 = std::count_if(up.begin(), up.end(), [&](std::size_t u) { return L.rank(u) == 3; });
          if (n >= 4 && rank3 != n - 2) ok = false;
        }
        const auto D = dualize(L);
        for (std::size_t e = 0; e < D.size(); ++e)
          if (D.rank(e) <= n - 2 && D.down_set(e).size() != (std::size_t{1} << D.rank(e))) ok = false;
        sweep.check(fq, ok, kn(k, n));
      }
    sweep.end(fe);
    sweep.end(fq);
  }

  // Toric h.
  {
    auto& frec = sweep.begin("toric_h.recursion_vs_formula");
    auto& fsym = sweep.begin("toric_h.symmetry");
    auto& funi = sweep.begin("toric_h.unimodality");
    auto& fsum = sweep.begin("toric_h.sum_rule");
    auto& fhalf = sweep.begin("toric_h.first_half_usual_h");
    for (int n = 2; n <= std::min(N, 8); ++n)
      for (int k = 1; 2 * k <= n; ++k) {
        const auto formula = toric_h_formula(k, n, shift).entries;
        const auto dual = dualize(hypersimplex_face_poset(k, n));
        const auto recursion = toric_h_vector(dual).entries;
        sweep.check(frec, formula == recursion, kn(k, n), vs("formula", formula, "recursion", recursion));
        const BigInt expected_sum = k * binomial(n, k);
        for (const auto& [name, h] : {std::pair{"formula", &formula}, std::pair{"recursion", &recursion}}) {
          sweep.check(fsym, symmetric(*h), kn(k, n) + " " + name, "[" + join(*h) + "]");
          sweep.check(funi, unimodal_first_half(*h), kn(k, n) + " " + name, "[" + join(*h) + "]");
          sweep.check(fsum, sum(*h) == expected_sum, kn(k, n) + " " + name,
                      "sum " + sum(*h).get_str() + ", expected " + expected_sum.get_str());
        }
        const auto usual = usual_h_from_f(f_vector(dual), n - 1).entries;
        bool ok = true;
        for (int r = 0; r < k; ++r) ok = ok && usual[r] == formula[r];
        sweep.check(fhalf, ok, kn(k, n), vs("usual", usual, "formula", formula));
      }
    sweep.end(frec);
    sweep.end(fsym);
    sweep.end(funi);
    sweep.end(fsum);
    sweep.end(fhalf);
  }
  {
    auto& f = sweep.begin("toric_h.simplicial_case");
    for (int n = 2; n <= std::min(N, 8); ++n) {
      const auto simplex = hypersimplex_face_poset(1, n);
      const auto toric = toric_h_vector(simplex).entries;
      const auto usual = usual_h_from_f(f_vector(simplex), n - 1).entries;
      const bool all_ones = std::all_of(toric.begin(), toric.end(), [](const BigInt& v) { return v == 1; });
      sweep.check(f, toric == usual && all_ones, "simplex n=" + std::to_string(n), vs("toric", toric, "usual", usual));
    }
    if (N >= 4) {
      const auto octahedron = hypersimplex_face_poset(2, 4);
      const auto toric = toric_h_vector(octahedron).entries;
      const auto usual = usual_h_from_f(f_vector(octahedron), 3).entries;
      sweep.check(f, toric == usual, "octahedron", vs("toric", toric, "usual", usual));
    }
    sweep.end(f);
  }

  // Chow-Betti numbers.
  {
    auto& f = sweep.begin("chow.formula_vs_oracle");
    auto& f0 = sweep.begin("chow.codim_zero");
    for (int n = 2; n <= N; ++n) {
      const RankMode mode = effective_mode(n, opt.mode, opt.force);
      for (int k = 1; 2 * k <= n; ++k) {
        const BigInt b0 = chow_betti_formula(0, k, n, shift);
        sweep.check(f0, b0 == 1 && chow_betti_oracle(0, k, n) == 1, rkn(0, k, n), "formula " + b0.get_str());
        for (int r = 1; r < n; ++r) {
          const BigInt formula = chow_betti_formula(r, k, n, shift);
          const BigInt oracle = chow_betti_oracle(r, k, n, mode, opt.prime);
          sweep.check(f, formula == oracle, rkn(r, k, n) + " (" + to_string(mode) + ")",
                      "formula " + formula.get_str() + ", oracle " + oracle.get_str());
        }
      }
    }
    sweep.end(f);
    sweep.end(f0);
  }
  {
    auto& f = sweep.begin("chow.basis");
    for (int n = 2; n <= std::min(N, 8); ++n)
      for (int k = 1; 2 * k <= n; ++k)
        for (int r = 1; r < n; ++r) {
          const auto rep = verify_basis(r, k, n, opt.mode, opt.prime);
          const BigInt formula = chow_betti_formula(r, k, n, shift);
          const bool ok = rep.basis_ok && rep.independent && rep.block_triangular &&
                          rep.betti_oracle == static_cast<unsigned long>(rep.basis_count) && formula == rep.betti_oracle;
          sweep.check(f, ok, rkn(r, k, n), to_json(rep).dump() + ", formula " + formula.get_str());
        }
    sweep.end(f);
  }
  {
    auto& f = sweep.begin("chow.k_symmetry");
    for (int n = 3; n <= std::min(N, 7); ++n)
      for (int k = 1; 2 * k < n; ++k)
        for (int r = 1; r < n; ++r) {
          const BigInt a = chow_betti_oracle(r, k, n, opt.mode, opt.prime);
          const BigInt b = chow_betti_oracle(r, n - k, n, opt.mode, opt.prime);
          sweep.check(f, a == b, rkn(r, k, n), "k: " + a.get_str() + ", n-k: " + b.get_str());
        }
    sweep.end(f);
  }

  // Coordinator numbers.
  {
    auto& fbfs = sweep.begin("growth.formula_vs_bfs");
    auto& fpal = sweep.begin("growth.palindromic");
    auto& fball = sweep.begin("growth.ball_counts");
    auto& fneg = sweep.begin("growth.negation_symmetry");
    for (int n = 2; n <= std::min(N, 7); ++n) {
      const int K = n + 2;
      const std::string inst = "n=" + std::to_string(n);
      const auto formula = coordinator_formula(n, shift);
      const auto ball = word_length_ball(n, K);
      CoordinationSequence seq{n, std::vector<BigInt>(K + 1, 0)};
      for (const auto& [cls, d] : ball) seq.values[d] += 1;
      std::vector<BigInt> from_bfs;
      try {
        from_bfs = coordinator_from_sequence(n, seq).padded(n);
      } catch (const InconsistentSequence& e) {
        sweep.check(fbfs, false, inst, e.what());
        continue;
      }
      sweep.check(fbfs, from_bfs == formula.padded(n), inst, vs("bfs", from_bfs, "formula", formula.padded(n)));
      sweep.check(fpal, symmetric(formula.padded(n)), inst + " formula", "[" + join(formula.padded(n)) + "]");
      sweep.check(fpal, symmetric(from_bfs), inst + " bfs", "[" + join(from_bfs) + "]");

      // Points within word length K are counted by h(x) / (1-x)^n.
      const auto predicted = series_over_one_minus_x(formula, n, K + 1);
      std::vector<BigInt> cumulative(K + 1, 0);
      for (int k = 0; k <= K; ++k) cumulative[k] = (k ? cumulative[k - 1] : BigInt(0)) + seq.values[k];
      sweep.check(fball, cumulative == predicted, inst, vs("counted", cumulative, "predicted", predicted));

      bool sym = true;
      for (const auto& [cls, d] : ball) {
        auto it = ball.find(-cls);
        if (it == ball.end() || it->second != d) sym = false;
      }
      sweep.check(fneg, sym, inst);
    }
    sweep.end(fbfs);
    sweep.end(fpal);
    sweep.end(fball);
    sweep.end(fneg);
  }
  {
    auto& f = sweep.begin("growth.cross_family");
    for (int n = 2; n <= std::min(N, 8); n += 2) {
      const auto coord = coordinator_formula(n, shift).padded(n);
      const auto toric = toric_h_formula(n / 2, n, shift).entries;
      bool ok = std::equal(coord.begin(), coord.begin() + n / 2, toric.begin());
      if (n <= 7) {
        const auto bfs = coordinator_from_sequence(n, coordination_sequence(n, n + 2)).padded(n);
        ok = ok && std::equal(bfs.begin(), bfs.begin() + n / 2, toric.begin());
      }
      sweep.check(f, ok, "n=" + std::to_string(n), vs("coordinator", coord, "toric h", toric));
    }
    sweep.end(f);
  }
  if (log) *log << (report.passed() ? "verify: all checks passed\n" : "verify: MISMATCH\n");
  return report;
}

}  // namespace hsimplex
