#include "pit/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pit/errors.hpp"

namespace pit {

namespace {

struct Tok {
  std::string s;
  int line = 1;
  int col = 1;
};

using TokLine = std::vector<Tok>;

std::vector<TokLine> lex(const std::string& text) {
  std::vector<TokLine> out;
  int line = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line;
    TokLine toks;
    for (std::size_t i = 0; i < raw.size();) {
      if (raw[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != '#' &&
             !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      toks.push_back({raw.substr(i, j - i), line, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

std::uint64_t to_u64(const std::string& s, int line, int col) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected an unsigned integer, got '" + s + "'", line, col);
  return v;
}

std::int64_t to_i64(const std::string& s, int line, int col) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + s + "'", line, col);
  return v;
}

std::uint64_t tok_u64(const Tok& t) { return to_u64(t.s, t.line, t.col); }

// key=value tokens
std::string kv(const Tok& t, const std::string& key) {
  if (t.s.size() > key.size() && t.s.compare(0, key.size(), key) == 0 &&
      t.s[key.size()] == '=')
    return t.s.substr(key.size() + 1);
  throw ParseError("expected " + key + "=<value>", t.line, t.col);
}

// kv whose value may legitimately be empty (e.g. vars= for an empty block)
std::string kv_allow_empty(const Tok& t, const std::string& key) {
  if (t.s.size() >= key.size() + 1 && t.s.compare(0, key.size(), key) == 0 &&
      t.s[key.size()] == '=')
    return t.s.substr(key.size() + 1);
  throw ParseError("expected " + key + "=<value>", t.line, t.col);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t at = 0;
  while (true) {
    std::size_t comma = s.find(',', at);
    if (comma == std::string::npos) {
      out.push_back(s.substr(at));
      return out;
    }
    out.push_back(s.substr(at, comma - at));
    at = comma + 1;
  }
}

void need(bool ok, const std::string& msg, int line, int col) {
  if (!ok) throw ParseError(msg, line, col);
}

std::uint64_t residue(const PrimeField& F, const std::string& s, int line,
                      int col) {
  if (!s.empty() && s[0] == '-') return F.reduce_signed(to_i64(s, line, col));
  return F.reduce(to_u64(s, line, col));
}

}  // namespace

std::string serialize_depth3(const Depth3Circuit& c) {
  std::ostringstream out;
  out << "depth3 p=" << c.p << " n=" << c.n << " k=" << c.k << "\n";
  for (int i = 0; i < c.k; ++i) {
    out << "gate a=" << c.top[static_cast<std::size_t>(i)] << "\n";
    for (const auto& form : c.gates[static_cast<std::size_t>(i)]) {
      out << "form " << form.b0;
      for (auto [v, coef] : form.terms) out << " " << v + 1 << ":" << coef;
      out << "\n";
    }
  }
  return out.str();
}

Depth3Circuit parse_depth3(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const TokLine& head = lines[0];
  need(head[0].s == "depth3", "expected depth3 header", head[0].line,
       head[0].col);
  need(head.size() == 4, "depth3 header needs p= n= k=", head[0].line,
       head[0].col);
  Depth3Circuit c;
  c.p = to_u64(kv(head[1], "p"), head[1].line, head[1].col);
  PrimeField F(c.p);
  c.n = static_cast<int>(to_u64(kv(head[2], "n"), head[2].line, head[2].col));
  c.k = static_cast<int>(to_u64(kv(head[3], "k"), head[3].line, head[3].col));

  int gate_line = head[0].line;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const TokLine& l = lines[li];
    if (l[0].s == "gate") {
      need(l.size() == 2, "gate line needs a=<coef>", l[0].line, l[0].col);
      c.top.push_back(residue(F, kv(l[1], "a"), l[1].line, l[1].col));
      c.gates.emplace_back();
      gate_line = l[0].line;
    } else if (l[0].s == "form") {
      need(!c.gates.empty(), "form before any gate", l[0].line, l[0].col);
      need(l.size() >= 2, "form line needs a constant", l[0].line, l[0].col);
      LinearForm form;
      form.b0 = residue(F, l[1].s, l[1].line, l[1].col);
      for (std::size_t ti = 2; ti < l.size(); ++ti) {
        std::size_t colon = l[ti].s.find(':');
        need(colon != std::string::npos, "expected <var>:<coef>", l[ti].line,
             l[ti].col);
        std::uint64_t v1 =
            to_u64(l[ti].s.substr(0, colon), l[ti].line, l[ti].col);
        need(v1 >= 1 && v1 <= static_cast<std::uint64_t>(c.n),
             "variable out of range", l[ti].line, l[ti].col);
        std::uint64_t coef = residue(F, l[ti].s.substr(colon + 1), l[ti].line,
                                     l[ti].col + static_cast<int>(colon) + 1);
        if (coef != 0) form.terms.emplace_back(static_cast<int>(v1) - 1, coef);
      }
      std::sort(form.terms.begin(), form.terms.end());
      for (std::size_t ti = 1; ti < form.terms.size(); ++ti)
        need(form.terms[ti].first != form.terms[ti - 1].first,
             "variable repeated within a form", l[0].line, l[0].col);
      c.gates.back().push_back(std::move(form));
    } else {
      throw ParseError("unexpected directive '" + l[0].s + "'", l[0].line,
                       l[0].col);
    }
  }
  need(static_cast<int>(c.gates.size()) == c.k, "gate count mismatch",
       head[0].line, head[0].col);
  try {
    validate_depth3(c);
  } catch (const UsageError& e) {
    throw ParseError(e.what(), gate_line, 1);
  }
  return c;
}

namespace {

std::string mono_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (auto [v, e] : m.e) {
    if (!s.empty()) s += '.';
    s += std::to_string(v + 1);
    s += '^';
    s += std::to_string(e);
  }
  return s;
}

Monomial parse_mono(const std::string& s, int n, int line, int col) {
  if (s == "1") return Monomial::one();
  std::vector<std::pair<int, int>> e;
  for (const std::string& part : [&] {
         std::vector<std::string> ps;
         std::size_t at = 0;
         while (at <= s.size()) {
           std::size_t dot = s.find('.', at);
           if (dot == std::string::npos) {
             ps.push_back(s.substr(at));
             break;
           }
           ps.push_back(s.substr(at, dot - at));
           at = dot + 1;
         }
         return ps;
       }()) {
    std::size_t hat = part.find('^');
    need(hat != std::string::npos, "expected <var>^<exp> in monomial", line,
         col);
    std::uint64_t v1 = to_u64(part.substr(0, hat), line, col);
    std::uint64_t exp = to_u64(part.substr(hat + 1), line, col);
    need(v1 >= 1 && v1 <= static_cast<std::uint64_t>(n),
         "monomial variable out of range", line, col);
    need(exp >= 1, "monomial exponent must be positive", line, col);
    e.emplace_back(static_cast<int>(v1) - 1, static_cast<int>(exp));
  }
  std::sort(e.begin(), e.end());
  for (std::size_t i = 1; i < e.size(); ++i)
    need(e[i].first != e[i - 1].first, "variable repeated within a monomial",
         line, col);
  return Monomial{e};
}

void emit_factor(std::ostringstream& out, const PolyMatrix& f, int idx,
                 bool boundary_left, bool boundary_right) {
  for (int r = 0; r < f.rows; ++r)
    for (int c = 0; c < f.cols; ++c) {
      const SparsePoly& e = f.at(r, c);
      if (e.is_zero()) continue;
      int row = boundary_left ? c + 1 : r + 1;
      int col = boundary_left || boundary_right ? 0 : c + 1;
      out << "entry " << idx << " " << row << " " << col;
      for (const auto& [m, coef] : e.terms)
        out << " " << mono_text(m) << "=" << coef;
      out << "\n";
    }
}

}  // namespace

std::string serialize_roabp(const Roabp& r) {
  std::ostringstream out;
  out << "roabp p=" << r.p << " n=" << r.n << " d=" << r.d << " w=" << r.w
      << "\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    out << "block " << i << " vars=";
    for (std::size_t j = 0; j < r.blocks[i].size(); ++j) {
      if (j) out << ",";
      out << r.blocks[i][j] + 1;
    }
    out << "\n";
  }
  emit_factor(out, r.left, 0, /*boundary_left=*/true, false);
  for (int i = 0; i < r.d; ++i)
    emit_factor(out, r.inner[static_cast<std::size_t>(i)], i + 1, false, false);
  emit_factor(out, r.right, r.d + 1, false, /*boundary_right=*/true);
  return out.str();
}

Roabp parse_roabp(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const TokLine& head = lines[0];
  need(head[0].s == "roabp", "expected roabp header", head[0].line, head[0].col);
  need(head.size() == 5, "roabp header needs p= n= d= w=", head[0].line,
       head[0].col);
  Roabp r;
  r.p = to_u64(kv(head[1], "p"), head[1].line, head[1].col);
  PrimeField F(r.p);
  r.n = static_cast<int>(to_u64(kv(head[2], "n"), head[2].line, head[2].col));
  r.d = static_cast<int>(to_u64(kv(head[3], "d"), head[3].line, head[3].col));
  r.w = static_cast<int>(to_u64(kv(head[4], "w"), head[4].line, head[4].col));
  need(r.w >= 1, "width must be at least 1", head[4].line, head[4].col);

  r.blocks.assign(static_cast<std::size_t>(r.d) + 2, {});
  std::vector<char> block_seen(static_cast<std::size_t>(r.d) + 2, 0);
  r.left = PolyMatrix(1, r.w);
  r.inner.assign(static_cast<std::size_t>(r.d), PolyMatrix(r.w, r.w));
  r.right = PolyMatrix(r.w, 1);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const TokLine& l = lines[li];
    if (l[0].s == "block") {
      need(l.size() == 3, "block line needs <i> vars=<list>", l[0].line,
           l[0].col);
      std::uint64_t bi = tok_u64(l[1]);
      need(bi < r.blocks.size(), "block index out of range", l[1].line,
           l[1].col);
      need(!block_seen[bi], "block repeated", l[1].line, l[1].col);
      block_seen[bi] = 1;
      for (const std::string& vs : split_commas(kv_allow_empty(l[2], "vars"))) {
        std::uint64_t v1 = to_u64(vs, l[2].line, l[2].col);
        need(v1 >= 1 && v1 <= static_cast<std::uint64_t>(r.n),
             "block variable out of range", l[2].line, l[2].col);
        r.blocks[bi].push_back(static_cast<int>(v1) - 1);
      }
      std::sort(r.blocks[bi].begin(), r.blocks[bi].end());
    } else if (l[0].s == "entry") {
      need(l.size() >= 4, "entry line needs <i> <row> <col>", l[0].line,
           l[0].col);
      std::uint64_t fi = tok_u64(l[1]);
      std::uint64_t row = tok_u64(l[2]);
      std::uint64_t col = tok_u64(l[3]);
      need(fi <= static_cast<std::uint64_t>(r.d) + 1, "factor index out of range",
           l[1].line, l[1].col);
      SparsePoly* cell = nullptr;
      if (fi == 0) {
        need(col == 0, "left boundary entries use col 0", l[3].line, l[3].col);
        need(row >= 1 && row <= static_cast<std::uint64_t>(r.w),
             "boundary position out of range", l[2].line, l[2].col);
        cell = &r.left.at(0, static_cast<int>(row) - 1);
      } else if (fi == static_cast<std::uint64_t>(r.d) + 1) {
        need(col == 0, "right boundary entries use col 0", l[3].line, l[3].col);
        need(row >= 1 && row <= static_cast<std::uint64_t>(r.w),
             "boundary position out of range", l[2].line, l[2].col);
        cell = &r.right.at(static_cast<int>(row) - 1, 0);
      } else {
        need(row >= 1 && row <= static_cast<std::uint64_t>(r.w) && col >= 1 &&
                 col <= static_cast<std::uint64_t>(r.w),
             "entry position out of range", l[2].line, l[2].col);
        cell = &r.inner[fi - 1].at(static_cast<int>(row) - 1,
                                   static_cast<int>(col) - 1);
      }
      need(cell->is_zero(), "entry repeated", l[0].line, l[0].col);
      for (std::size_t ti = 4; ti < l.size(); ++ti) {
        std::size_t eq = l[ti].s.find('=');
        need(eq != std::string::npos, "expected <monomial>=<coef>", l[ti].line,
             l[ti].col);
        Monomial m =
            parse_mono(l[ti].s.substr(0, eq), r.n, l[ti].line, l[ti].col);
        need(cell->coeff(m) == nullptr, "monomial repeated within an entry",
             l[ti].line, l[ti].col);
        std::uint64_t coef =
            residue(F, l[ti].s.substr(eq + 1), l[ti].line,
                    l[ti].col + static_cast<int>(eq) + 1);
        mp_add_term(F, *cell, m, coef);
      }
    } else {
      throw ParseError("unexpected directive '" + l[0].s + "'", l[0].line,
                       l[0].col);
    }
  }
  for (std::size_t i = 0; i < block_seen.size(); ++i)
    need(block_seen[i], "block " + std::to_string(i) + " missing",
         head[0].line, head[0].col);

  FactorStats st = roabp_stats(r);
  r.delta = st.degree;
  r.s = std::max(1, st.sparsity);
  r.mu = st.max_support;
  try {
    validate_roabp(r);
  } catch (const UsageError& e) {
    throw ParseError(e.what(), head[0].line, 1);
  }
  return r;
}

CircuitKind sniff_circuit(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const Tok& t = lines[0][0];
  if (t.s == "depth3") return CircuitKind::kDepth3;
  if (t.s == "roabp") return CircuitKind::kRoabp;
  throw ParseError("unknown circuit kind '" + t.s + "'", t.line, t.col);
}

std::string serialize_hitting_set(const HittingSetFile& h) {
  std::ostringstream out;
  out << "hittingset p=" << h.p << " n=" << h.n << " count=" << h.points.size()
      << "\n";
  for (const auto& pt : h.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (i) out << ",";
      out << pt[i];
    }
    out << "\n";
  }
  return out.str();
}

HittingSetFile parse_hitting_set(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const TokLine& head = lines[0];
  need(head[0].s == "hittingset", "expected hittingset header", head[0].line,
       head[0].col);
  need(head.size() == 4, "hittingset header needs p= n= count=", head[0].line,
       head[0].col);
  HittingSetFile h;
  h.p = to_u64(kv(head[1], "p"), head[1].line, head[1].col);
  PrimeField F(h.p);
  h.n = static_cast<int>(to_u64(kv(head[2], "n"), head[2].line, head[2].col));
  std::uint64_t count =
      to_u64(kv(head[3], "count"), head[3].line, head[3].col);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const TokLine& l = lines[li];
    need(l.size() == 1, "one comma-separated point per line", l[0].line,
         l[0].col);
    std::vector<std::uint64_t> pt;
    for (const std::string& vs : split_commas(l[0].s))
      pt.push_back(F.reduce(to_u64(vs, l[0].line, l[0].col)));
    need(static_cast<int>(pt.size()) == h.n, "point arity mismatch", l[0].line,
         l[0].col);
    h.points.push_back(std::move(pt));
  }
  need(h.points.size() == count, "count mismatch", head[3].line, head[3].col);
  return h;
}

std::string serialize_partition(const Partition& part) {
  std::string out;
  for (const auto& color : part.colors) {
    out += '{';
    for (std::size_t i = 0; i < color.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(color[i] + 1);
    }
    out += '}';
  }
  return out;
}

Partition parse_partition(const std::string& line, int n) {
  std::vector<std::vector<int>> colors;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
  };
  skip_ws();
  while (i < line.size()) {
    need(line[i] == '{', "expected '{'", 1, static_cast<int>(i) + 1);
    std::size_t close = line.find('}', i);
    need(close != std::string::npos, "unterminated color", 1,
         static_cast<int>(i) + 1);
    std::vector<int> color;
    for (const std::string& vs :
         split_commas(line.substr(i + 1, close - i - 1))) {
      std::uint64_t v1 = to_u64(vs, 1, static_cast<int>(i) + 2);
      need(v1 >= 1 && v1 <= static_cast<std::uint64_t>(n),
           "variable out of range", 1, static_cast<int>(i) + 2);
      color.push_back(static_cast<int>(v1) - 1);
    }
    need(!color.empty(), "empty color", 1, static_cast<int>(i) + 1);
    colors.push_back(std::move(color));
    i = close + 1;
    skip_ws();
  }
  try {
    return make_partition(n, std::move(colors));
  } catch (const UsageError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string serialize_kmap(const MonomialMap& m) {
  std::ostringstream out;
  out << "kmap q=";
  for (int i = 0; i < m.m; ++i) {
    if (i) out << ",";
    out << m.q[static_cast<std::size_t>(i)];
  }
  out << " base=";
  for (int i = 0; i < m.m; ++i) {
    if (i) out << ",";
    out << m.base[static_cast<std::size_t>(i)];
  }
  out << " targets=";
  for (int v = 0; v < m.n; ++v) {
    if (v) out << ",";
    out << m.target[static_cast<std::size_t>(v)] + 1;
  }
  return out.str();
}

MonomialMap parse_kmap(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const TokLine& l = lines[0];
  need(l[0].s == "kmap", "expected kmap header", l[0].line, l[0].col);
  need(l.size() == 4, "kmap needs q= base= targets=", l[0].line, l[0].col);
  MonomialMap m;
  for (const std::string& qs : split_commas(kv(l[1], "q")))
    m.q.push_back(to_u64(qs, l[1].line, l[1].col));
  for (const std::string& bs : split_commas(kv(l[2], "base")))
    m.base.push_back(to_u64(bs, l[2].line, l[2].col));
  need(!m.q.empty() && m.q.size() == m.base.size(),
       "q and base lists must match", l[1].line, l[1].col);
  m.m = static_cast<int>(m.q.size());
  for (const std::string& ts : split_commas(kv(l[3], "targets"))) {
    std::uint64_t t1 = to_u64(ts, l[3].line, l[3].col);
    need(t1 >= 1 && t1 <= static_cast<std::uint64_t>(m.m),
         "target index out of range", l[3].line, l[3].col);
    m.target.push_back(static_cast<int>(t1) - 1);
  }
  m.n = static_cast<int>(m.target.size());
  // exponent of each variable: base^(rank within its target group) mod q
  m.exp.assign(static_cast<std::size_t>(m.n), 0);
  std::vector<std::uint64_t> rank(static_cast<std::size_t>(m.m), 0);
  for (int v = 0; v < m.n; ++v) {
    auto b = static_cast<std::size_t>(m.target[static_cast<std::size_t>(v)]);
    std::uint64_t q = m.q[b];
    need(q >= 2, "map prime must be at least 2", l[1].line, l[1].col);
    std::uint64_t e = 1 % q;
    for (std::uint64_t i = 0; i < rank[b]; ++i)
      e = static_cast<std::uint64_t>((unsigned __int128)e * (m.base[b] % q) % q);
    m.exp[static_cast<std::size_t>(v)] = e;
    ++rank[b];
  }
  return m;
}

std::string serialize_verdict(const Verdict& v) {
  std::string out = v.zero ? "verdict=zero witness=-" : "verdict=nonzero witness=";
  if (!v.zero) {
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v.witness[i]);
    }
    if (v.witness.empty()) out += '-';
  }
  return out + "\n";
}

Verdict parse_verdict(const std::string& text) {
  auto lines = lex(text);
  need(!lines.empty(), "empty input", 1, 1);
  const TokLine& l = lines[0];
  need(l.size() == 2, "verdict needs verdict= and witness=", l[0].line,
       l[0].col);
  Verdict v;
  std::string kind = kv(l[0], "verdict");
  if (kind == "zero")
    v.zero = true;
  else if (kind == "nonzero")
    v.zero = false;
  else
    throw ParseError("verdict must be zero or nonzero", l[0].line, l[0].col);
  std::string wit = kv(l[1], "witness");
  if (wit != "-")
    for (const std::string& ws : split_commas(wit))
      v.witness.push_back(to_u64(ws, l[1].line, l[1].col));
  return v;
}

}  // namespace pit
