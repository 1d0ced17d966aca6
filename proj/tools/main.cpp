#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pit/basesets.hpp"
#include "pit/circuits.hpp"
#include "pit/codec.hpp"
#include "pit/concentration.hpp"
#include "pit/errors.hpp"
#include "pit/expand.hpp"
#include "pit/hitgen.hpp"
#include "pit/kronecker.hpp"
#include "pit/linalg.hpp"
#include "pit/oracle.hpp"
#include "pit/partitions.hpp"
#include "pit/rng.hpp"

namespace {

using namespace pit;

constexpr const char* kUsage = R"(usage: pit <command> [flags]

commands:
  gen      --model depth3|roabp --n N [--k K] [--delta D] [--w W] [--d D]
           [--s S] [--mu M] [--invertible] [--p P] [--seed S] [-o FILE]
  analyze  FILE
  hit      --method delta|basesets|roabp|width2 [model flags | --circuit FILE]
           [--p P] [--stream] [-o FILE]
  test     FILE [--method delta|basesets|sumsetmult|roabp|width2|brute|sz]
           [--hs FILE] [--delta D] [--trials T] [--seed S] [--max-partitions B]
  verify   dDistlConc|bSConc|sparse|rowComb|mark|lagrange|width2 [flags]
  bench    --method delta|basesets|roabp|width2 [model flags | --circuit FILE]

common flags: --p PRIME --seed SEED --exact-rank --stream
exit codes: 0 ok/zero verdict/PASS, 1 nonzero verdict/FAIL, 2 usage,
            3 promise or class violation
)";

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> kv;

  bool has(const std::string& k) const { return kv.count(k) > 0; }

  std::string str(const std::string& k, const std::string& def = "") const {
    auto it = kv.find(k);
    return it == kv.end() ? def : it->second;
  }

  std::uint64_t num(const std::string& k, std::uint64_t def) const {
    auto it = kv.find(k);
    if (it == kv.end()) return def;
    try {
      std::size_t used = 0;
      auto v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("flag --" + k + " needs a number, got '" + it->second +
                       "'");
    }
  }

  int numi(const std::string& k, int def) const {
    auto v = num(k, static_cast<std::uint64_t>(def));
    if (v > (1u << 30)) throw UsageError("flag --" + k + " is out of range");
    return static_cast<int>(v);
  }

  std::uint64_t require_num(const std::string& k) const {
    if (!has(k)) throw UsageError("missing required flag --" + k);
    return num(k, 0);
  }

  int require_numi(const std::string& k) const {
    if (!has(k)) throw UsageError("missing required flag --" + k);
    return numi(k, 0);
  }
};

Args parse_args(int argc, char** argv) {
  static const std::set<std::string> bool_flags = {"exact-rank", "stream",
                                                   "exhaustive", "invertible"};
  Args a;
  for (int i = 2; i < argc; ++i) {
    std::string t = argv[i];
    if (t == "-o") {
      if (i + 1 >= argc) throw UsageError("-o needs a path");
      a.kv["o"] = argv[++i];
    } else if (t.rfind("--", 0) == 0) {
      std::string key = t.substr(2);
      if (bool_flags.count(key)) {
        a.kv[key] = "1";
      } else {
        if (i + 1 >= argc) throw UsageError("flag --" + key + " needs a value");
        a.kv[key] = argv[++i];
      }
    } else {
      a.pos.push_back(t);
    }
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const Args& a, const std::string& text) {
  if (a.has("o"))
    write_file(a.str("o"), text);
  else
    std::cout << text;
}

std::string set_braces(const std::vector<int>& vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vars[i] + 1);
  }
  return s + "}";
}

int ceil_log2(std::uint64_t x) {
  int l = 0;
  while ((1ull << l) < x) ++l;
  return l;
}

MonomialMap separating_map(int n, int support_cap, int d) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 0);
  auto fam = enumerate_support_bounded(vars, support_cap, d);
  return find_separating_map(fam, n, d);
}

std::vector<Partition> distinct_partitions(const Depth3Circuit& c) {
  auto parts = induced_partitions(c);
  std::vector<Partition> uniq;
  for (auto& p : parts) {
    bool dup = false;
    for (const auto& u : uniq)
      if (u == p) dup = true;
    if (!dup) uniq.push_back(std::move(p));
  }
  return uniq;
}

HSParams depth3_params(const Args& a, const Depth3Circuit& c, int delta) {
  HSParams ps;
  ps.p = c.p;
  ps.n = c.n;
  ps.k = c.k;
  ps.delta = a.numi("delta", delta);
  return ps;
}

HSParams roabp_params_from(const Roabp& r) {
  HSParams ps;
  ps.p = r.p;
  ps.n = r.n;
  ps.w = r.w;
  ps.d = r.d;
  ps.delta = std::max(1, r.delta);
  ps.s = r.s;
  ps.mu = std::max(1, r.mu);
  return ps;
}

HSParams params_from_flags(const Args& a) {
  HSParams ps;
  ps.p = a.num("p", kDefaultPrime);
  ps.n = a.require_numi("n");
  ps.k = a.numi("k", 1);
  ps.delta = a.numi("delta", 1);
  ps.w = a.numi("w", 1);
  ps.d = a.numi("d", 0);
  ps.s = a.numi("s", 1);
  ps.mu = a.numi("mu", 1);
  return ps;
}

// Builds the stream for hit/bench: from an explicit circuit file or flags.
PointStream make_stream(const Args& a, const std::string& method) {
  if (method == "delta") {
    if (a.has("circuit")) {
      auto c = parse_depth3(read_file(a.str("circuit")));
      int dist = distance(make_seq(induced_partitions(c)));
      return hs_delta_distance(depth3_params(a, c, std::max(1, dist)));
    }
    return hs_delta_distance(params_from_flags(a));
  }
  if (method == "basesets") {
    if (!a.has("circuit"))
      throw UsageError("--method basesets needs --circuit FILE");
    auto c = parse_depth3(read_file(a.str("circuit")));
    auto decomp = base_sets(distinct_partitions(c));
    return hs_base_sets(depth3_params(a, c, 1), decomp);
  }
  if (method == "roabp" || method == "width2") {
    HSParams ps;
    if (a.has("circuit")) {
      auto r = parse_roabp(read_file(a.str("circuit")));
      ps = roabp_params_from(r);
      ps.delta = a.numi("delta", ps.delta);
    } else {
      ps = params_from_flags(a);
    }
    return method == "roabp" ? hs_roabp_invertible(ps) : hs_width2(ps);
  }
  throw UsageError("unknown method '" + method + "'");
}

int cmd_gen(const Args& a) {
  auto model = a.str("model");
  std::uint64_t p = a.num("p", kDefaultPrime);
  std::uint64_t seed = a.num("seed", 0);
  if (model == "depth3") {
    auto c = random_depth3(p, a.require_numi("n"), a.numi("k", 1),
                           a.numi("delta", 1), seed);
    emit(a, serialize_depth3(c));
    return 0;
  }
  if (model == "roabp") {
    auto r = random_roabp(p, a.require_numi("n"), a.numi("d", 1),
                          a.numi("w", 1), a.numi("delta", 1), a.numi("s", 1),
                          a.numi("mu", 1), a.has("invertible"), seed);
    emit(a, serialize_roabp(r));
    return 0;
  }
  throw UsageError("gen needs --model depth3|roabp");
}

int cmd_analyze(const Args& a) {
  if (a.pos.empty()) throw UsageError("analyze needs a circuit file");
  auto text = read_file(a.pos[0]);
  std::ostringstream out;
  if (sniff_circuit(text) == CircuitKind::kDepth3) {
    auto c = parse_depth3(text);
    auto parts = induced_partitions(c);
    int dist = distance(make_seq(parts));
    auto uniq = distinct_partitions(c);
    auto decomp = base_sets(uniq);
    out << "model=depth3\n";
    out << "p=" << c.p << "\n";
    out << "n=" << c.n << "\n";
    out << "k=" << c.k << "\n";
    out << "distance=" << dist << "\n";
    out << "distinct_partitions=" << uniq.size() << "\n";
    out << "base_sets=" << decomp.sets.size() << "\n";
    for (std::size_t i = 0; i < decomp.sets.size(); ++i)
      out << "base_set_" << i + 1 << "=" << set_braces(decomp.sets[i]) << "\n";
  } else {
    auto r = parse_roabp(text);
    auto st = roabp_stats(r);
    PrimeField F(r.p);
    bool invertible = true;
    for (const auto& f : r.inner)
      if (det_symbolic(F, f).is_zero()) invertible = false;
    out << "model=roabp\n";
    out << "p=" << r.p << "\n";
    out << "n=" << r.n << "\n";
    out << "w=" << r.w << "\n";
    out << "d=" << r.d << "\n";
    out << "degree=" << st.degree << "\n";
    out << "sparsity=" << st.sparsity << "\n";
    out << "max_support=" << st.max_support << "\n";
    out << "invertible=" << (invertible ? 1 : 0) << "\n";
  }
  std::cout << out.str();
  return 0;
}

int cmd_hit(const Args& a) {
  if (!a.has("method")) throw UsageError("hit needs --method");
  auto stream = make_stream(a, a.str("method"));
  if (a.has("stream")) {
    while (auto hp = stream.next()) {
      std::string line;
      for (std::size_t i = 0; i < hp->x.size(); ++i) {
        if (i) line += ',';
        line += std::to_string(hp->x[i]);
      }
      std::cout << line << "\n";
    }
    return 0;
  }
  auto h = stream.materialize();
  emit(a, serialize_hitting_set(h.to_file()));
  return 0;
}

int print_verdict_exit(const Verdict& v) {
  std::cout << serialize_verdict(v);
  return v.zero ? 0 : 1;
}

int cmd_test(const Args& a) {
  if (a.pos.empty()) throw UsageError("test needs a circuit file");
  auto text = read_file(a.pos[0]);
  auto kind = sniff_circuit(text);
  std::uint64_t seed = a.num("seed", 0);

  // evaluator + default method per model
  Depth3Circuit c3;
  Roabp rb;
  std::function<std::uint64_t(const std::vector<std::uint64_t>&)> eval;
  std::string method;
  if (kind == CircuitKind::kDepth3) {
    c3 = parse_depth3(text);
    eval = [&c3](const std::vector<std::uint64_t>& x) {
      return eval_depth3(c3, x).first;
    };
    method = a.str("method", "delta");
  } else {
    rb = parse_roabp(text);
    eval = [&rb](const std::vector<std::uint64_t>& x) {
      return eval_roabp(rb, x);
    };
    method = a.str("method", rb.w == 2 ? "width2" : "roabp");
  }
  std::cout << "method=" << (a.has("hs") ? "file" : method) << "\n";

  if (a.has("hs")) {
    auto h = parse_hitting_set(read_file(a.str("hs")));
    std::uint64_t want_p = kind == CircuitKind::kDepth3 ? c3.p : rb.p;
    int want_n = kind == CircuitKind::kDepth3 ? c3.n : rb.n;
    if (h.p != want_p || h.n != want_n)
      throw UsageError("hitting set does not match the circuit's field/vars");
    std::cout << "points=" << h.points.size() << "\n";
    Verdict v;
    std::uint64_t scanned = 0;
    for (const auto& pt : h.points) {
      ++scanned;
      if (eval(pt) != 0) {
        v.zero = false;
        v.witness = pt;
        break;
      }
    }
    std::cout << "scanned=" << scanned << "\n";
    return print_verdict_exit(v);
  }

  if (method == "brute") {
    Verdict v = kind == CircuitKind::kDepth3 ? brute_pit(c3) : brute_pit(rb);
    return print_verdict_exit(v);
  }
  if (method == "sz") {
    int trials = a.numi("trials", 20);
    std::uint64_t p = kind == CircuitKind::kDepth3 ? c3.p : rb.p;
    int n = kind == CircuitKind::kDepth3 ? c3.n : rb.n;
    int deg = kind == CircuitKind::kDepth3
                  ? c3.n
                  : (rb.d + 2) * std::max(1, rb.delta);
    auto res = schwartz_zippel(eval, p, n, deg, trials, seed);
    std::cout << "trials=" << trials << "\n";
    if (res.verdict.zero)
      std::cout << "failure_bound=" << res.failure_bound << "\n";
    return print_verdict_exit(res.verdict);
  }
  if (method == "sumsetmult") {
    if (kind != CircuitKind::kDepth3)
      throw UsageError("--method sumsetmult needs a depth-3 circuit");
    auto v = whitebox_sum_setmult(c3, a.numi("max-partitions", c3.k));
    return print_verdict_exit(v);
  }

  PointStream stream = [&] {
    if (kind == CircuitKind::kDepth3) {
      if (method == "delta") {
        int dist = distance(make_seq(induced_partitions(c3)));
        return hs_delta_distance(depth3_params(a, c3, std::max(1, dist)));
      }
      if (method == "basesets") {
        auto decomp = base_sets(distinct_partitions(c3));
        return hs_base_sets(depth3_params(a, c3, 1), decomp);
      }
      throw UsageError("method '" + method + "' does not fit a depth-3 input");
    }
    HSParams ps = roabp_params_from(rb);
    ps.delta = a.numi("delta", ps.delta);
    if (method == "roabp") return hs_roabp_invertible(ps);
    if (method == "width2") return hs_width2(ps);
    throw UsageError("method '" + method + "' does not fit a ROABP input");
  }();
  std::cout << "declared=" << stream.declared_count() << "\n";
  auto res = blackbox_test(eval, stream);
  std::cout << "scanned=" << res.scanned << "\n";
  if (!res.verdict.zero) std::cout << "provenance=" << res.provenance << "\n";
  return print_verdict_exit(res.verdict);
}

RankMode rank_mode(const Args& a) {
  return a.has("exact-rank") ? RankMode::kExact : RankMode::kEval;
}

int report_exit(const std::string& claim, const std::string& params,
                const ConcReport& rep) {
  std::cout << format_report(claim, params, rep);
  return rep.concentrated ? 0 : 1;
}

int verify_row_comb(const Args& a) {
  int n = a.require_numi("n");
  int l = a.require_numi("l");
  auto field = a.require_num("field");
  auto m = transfer_matrix(n, l);
  auto w = static_cast<std::uint64_t>(check_rowspan_weight(m, field));
  std::uint64_t bound = 1ull << l;
  bool pass = w >= bound;
  std::cout << "min_weight=" << w << " bound=" << bound << " "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int verify_mark(const Args& a) {
  int n = a.require_numi("n");
  int l = a.require_numi("l");
  auto m = transfer_matrix(n, l);
  PrimeField F(a.num("p", kDefaultPrime));
  const std::uint64_t cols = m.cols();
  const std::uint64_t budget = (1ull << l) - 1;
  std::uint64_t checked = 0, failures = 0;
  auto run = [&](const std::vector<std::uint64_t>& marked) {
    ++checked;
    if (!check_marked_rank(F, m, marked)) ++failures;
  };
  if (a.has("exhaustive")) {
    // all column subsets within the deletion budget
    std::uint64_t total = 0, binom = 1;
    for (std::uint64_t size = 0; size <= budget && size <= cols; ++size) {
      if (size > 0) binom = binom * (cols - size + 1) / size;
      total += binom;
      if (total > (1u << 22))
        throw SizeLimitError("exhaustive mark space too large");
    }
    for (std::uint64_t size = 0; size <= budget && size <= cols; ++size) {
      std::vector<std::uint64_t> idx(static_cast<std::size_t>(size));
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        run(idx);
        // next combination of [0, cols)
        int i = static_cast<int>(size) - 1;
        while (i >= 0 &&
               idx[static_cast<std::size_t>(i)] ==
                   cols - size + static_cast<std::uint64_t>(i))
          --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1;
             j < static_cast<std::size_t>(size); ++j)
          idx[j] = idx[j - 1] + 1;
      }
      if (size == 0) continue;
    }
  } else {
    int trials = a.numi("trials", 1000);
    SplitMix64 rng(a.num("seed", 0));
    for (int t = 0; t < trials; ++t) {
      std::set<std::uint64_t> pick;
      while (pick.size() < budget && pick.size() < cols)
        pick.insert(rng.below(cols));
      run(std::vector<std::uint64_t>(pick.begin(), pick.end()));
    }
  }
  bool pass = failures == 0;
  std::cout << "checked=" << checked << " failures=" << failures << " "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int verify_ddist(const Args& a) {
  std::uint64_t p = a.num("p", kDefaultPrime);
  int n = a.require_numi("n");
  int k = a.numi("k", 2);
  int delta = a.numi("delta", 1);
  std::uint64_t seed = a.num("seed", 0);
  auto c = random_depth3(p, n, k, delta, seed);
  HSParams ps;
  ps.p = p;
  ps.n = n;
  ps.k = k;
  ps.delta = delta;
  auto map = separating_map(n, ps.support_cap(), 1);
  auto table = expand_shifted_depth3(shift_depth3(c, map));
  auto rep = is_l_concentrated(PrimeField(p), table, ps.l(), rank_mode(a),
                               seed + 1);
  std::ostringstream params;
  params << "n=" << n << " k=" << k << " delta=" << delta << " l=" << ps.l()
         << " seed=" << seed;
  return report_exit("dDistlConc", params.str(), rep);
}

// Constant terms resampled to an invertible matrix; declared bounds refreshed.
void force_invertible_const(Roabp& r, SplitMix64& rng) {
  PrimeField F(r.p);
  for (auto& factor : r.inner) {
    const int w = factor.rows;
    for (;;) {
      std::vector<std::vector<std::uint64_t>> cand(static_cast<std::size_t>(w));
      for (auto& row : cand) {
        row.resize(static_cast<std::size_t>(w));
        for (auto& v : row) v = rng.below(r.p);
      }
      if (rank_mod_p(F, cand) != w) continue;
      for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) {
          auto& cell = factor.at(i, j);
          auto cv = cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          cell.terms.erase(Monomial::one());
          if (cv != 0) cell.terms.emplace(Monomial::one(), cv);
        }
      break;
    }
  }
  auto st = roabp_stats(r);
  r.delta = st.degree;
  r.s = std::max(1, st.sparsity);
  r.mu = st.max_support;
  validate_roabp(r);
}

int verify_bsconc(const Args& a) {
  std::uint64_t p = a.num("p", kDefaultPrime);
  int n = a.require_numi("n");
  int w = a.numi("w", 2);
  int d = a.numi("d", 2);
  std::uint64_t seed = a.num("seed", 0);
  auto r = random_roabp(p, n, d, w, a.numi("delta", 1), a.numi("s", 2),
                        a.numi("mu", 1), false, seed);
  SplitMix64 rng(seed + 1);
  force_invertible_const(r, rng);
  int lb = w * w;
  auto rep = is_block_concentrated(PrimeField(p), expand_roabp_interior(r),
                                   r.blocks, lb, rank_mode(a), seed + 2);
  std::ostringstream params;
  params << "n=" << n << " w=" << w << " d=" << d << " lb=" << lb
         << " seed=" << seed;
  return report_exit("bSConc", params.str(), rep);
}

int verify_sparse(const Args& a) {
  std::uint64_t p = a.num("p", kDefaultPrime);
  int n = a.require_numi("n");
  int s = a.numi("s", 2);
  int mu = a.numi("mu", std::min(n, 3));
  int delta = a.numi("delta", mu);
  std::uint64_t seed = a.num("seed", 0);
  auto r = random_roabp(p, n, 1, 1, delta, s, mu, false, seed);
  auto st = roabp_stats(r);
  int sp = std::max(1, st.sparsity);
  int l = 1 + 2 * std::min(ceil_log2(static_cast<std::uint64_t>(sp)),
                           st.max_support);
  auto map = separating_map(n, l, std::max(1, st.degree));
  auto table = expand_shifted_roabp_interior(shift_roabp(r, map));
  auto rep =
      is_l_concentrated(PrimeField(p), table, l, rank_mode(a), seed + 1);
  std::ostringstream params;
  params << "n=" << n << " s=" << sp << " mu=" << st.max_support
         << " delta=" << st.degree << " l=" << l << " seed=" << seed;
  return report_exit("sparse", params.str(), rep);
}

int verify_lagrange(const Args& a) {
  std::uint64_t p = a.num("p", kDefaultPrime);
  std::uint64_t seed = a.num("seed", 0);
  int hn = a.numi("nodes", 3);
  int m = a.numi("m", 2);
  int db = a.numi("delta-bound", std::max(1, hn - 1));
  if (hn < 2 || hn - 1 > db)
    throw UsageError("need nodes >= 2 and delta-bound >= nodes-1");
  PrimeField F(p);
  SplitMix64 rng(seed);
  // distinct univariate nodes
  std::set<std::uint64_t> vals;
  while (static_cast<int>(vals.size()) < hn) vals.insert(rng.below(p));
  HittingSet h;
  h.p = p;
  h.n = 1;
  for (auto v : vals) h.points.push_back({v});
  h.declared_count = h.points.size();
  h.provenance.assign(h.points.size(), "node");
  // C = f_1 * f_2^(m-1): f_1 vanishes on all nodes but the last, the others
  // vanish on the last node only. Every factor is hit by h, C vanishes on h.
  auto eval_c = [&](const std::vector<std::uint64_t>& x) {
    std::uint64_t f1 = 1;
    for (int i = 0; i + 1 < hn; ++i)
      f1 = F.mul(f1, F.sub(x[0], h.points[static_cast<std::size_t>(i)][0]));
    std::uint64_t out = f1;
    auto last = h.points[static_cast<std::size_t>(hn - 1)][0];
    for (int j = 1; j < m; ++j) out = F.mul(out, F.sub(x[0], last));
    return out;
  };
  for (const auto& pt : h.points)
    if (eval_c(pt) != 0) throw Error("fixture must vanish on every node");
  auto stream = lagrange_combine(h, m, db);
  auto declared = stream.declared_count();
  auto res = blackbox_test(eval_c, stream);
  bool pass = !res.verdict.zero;
  std::cout << "claim=lagrange\n"
            << "nodes=" << hn << " m=" << m << " delta_bound=" << db
            << " count=" << declared << " seed=" << seed << "\n"
            << "caught=" << (pass ? 1 : 0) << "\n"
            << "verdict=" << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int verify_width2(const Args& a) {
  std::uint64_t p = a.num("p", kDefaultPrime);
  int n = a.require_numi("n");
  int d = a.numi("d", 3);
  std::uint64_t seed = a.num("seed", 0);
  auto r = random_roabp(p, n, d, 2, 1, 2, 1, true, seed);
  // overwrite every second interior factor with a singular one built from a
  // variable of its own block (or a constant when the block is empty)
  int singular = 0;
  for (int i = 0; i < d; i += 2) {
    auto& f = r.inner[static_cast<std::size_t>(i)];
    const auto& block = r.blocks[static_cast<std::size_t>(i + 1)];
    SparsePoly e;
    if (block.empty()) {
      e = SparsePoly::constant(2 + static_cast<std::uint64_t>(i));
    } else {
      e.terms.emplace(Monomial::var(block[0]), 1);
      e.terms.emplace(Monomial::one(), 1);  // x + 1
    }
    // rank-1 pattern cycling the four first-nonzero cases
    f = PolyMatrix(2, 2);
    switch ((i / 2) % 4) {
      case 0: f.at(0, 0) = e; f.at(0, 1) = e; f.at(1, 0) = e; f.at(1, 1) = e; break;
      case 1: f.at(0, 1) = e; f.at(1, 1) = e; break;
      case 2: f.at(1, 0) = e; f.at(1, 1) = e; break;
      default: f.at(1, 1) = e; break;
    }
    ++singular;
  }
  auto st = roabp_stats(r);
  r.delta = st.degree;
  r.s = std::max(1, st.sparsity);
  r.mu = st.max_support;
  validate_roabp(r);
  auto fac = factor_width2(r);
  PrimeField F(p);
  SplitMix64 rng(seed + 1);
  int checks = a.numi("trials", 100);
  bool pass = !fac.identically_zero;
  for (int t = 0; t < checks && pass; ++t) {
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n));
    for (auto& v : pt) v = rng.below(p);
    std::uint64_t lhs = F.mul(mp_eval(F, fac.alpha, pt), eval_roabp(r, pt));
    std::uint64_t rhs = 1;
    for (const auto& piece : fac.factors) rhs = F.mul(rhs, eval_roabp(piece, pt));
    if (lhs != rhs) pass = false;
  }
  std::cout << "claim=width2\n"
            << "n=" << n << " d=" << d << " seed=" << seed
            << " singular=" << singular << " pieces=" << fac.factors.size()
            << "\n"
            << "checks=" << checks << "\n"
            << "verdict=" << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_verify(const Args& a) {
  if (a.pos.empty())
    throw UsageError(
        "verify needs a claim: dDistlConc|bSConc|sparse|rowComb|mark|lagrange|"
        "width2");
  const std::string& claim = a.pos[0];
  if (claim == "rowComb") return verify_row_comb(a);
  if (claim == "mark") return verify_mark(a);
  if (claim == "dDistlConc") return verify_ddist(a);
  if (claim == "bSConc") return verify_bsconc(a);
  if (claim == "sparse") return verify_sparse(a);
  if (claim == "lagrange") return verify_lagrange(a);
  if (claim == "width2") return verify_width2(a);
  throw UsageError("unknown claim '" + claim + "'");
}

int cmd_bench(const Args& a) {
  if (!a.has("method")) throw UsageError("bench needs --method");
  auto start = std::chrono::steady_clock::now();
  auto stream = make_stream(a, a.str("method"));
  std::uint64_t emitted = 0;
  while (stream.next()) ++emitted;
  auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << "method=" << a.str("method") << "\n"
            << "declared=" << stream.declared_count() << "\n"
            << "emitted=" << emitted << "\n";
  std::cerr << "wall_ms=" << wall << "\n";
  return 0;
}

int dispatch(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  std::string cmd = argv[1];
  auto a = parse_args(argc, argv);
  if (cmd == "gen") return cmd_gen(a);
  if (cmd == "analyze") return cmd_analyze(a);
  if (cmd == "hit") return cmd_hit(a);
  if (cmd == "test") return cmd_test(a);
  if (cmd == "verify") return cmd_verify(a);
  if (cmd == "bench") return cmd_bench(a);
  std::cerr << kUsage;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const pit::PromiseViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pit::ClassViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
