#pragma once
// Definition-file sessions: build validated algebras, morphisms, perfect
// complexes, resolutions, and cohomology models from a parsed document, run
// the requested computations and theorem verifications, and emit a
// machine-readable report.  All reported values are exact; reports are
// byte-deterministic for identical inputs and configuration.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include <hochlef/algebra.hpp>
#include <hochlef/cohomology.hpp>
#include <hochlef/hochschild.hpp>
#include <hochlef/invariants.hpp>
#include <hochlef/perf.hpp>
#include <hochlef/resolution.hpp>
#include <hochlef/textformat.hpp>

namespace hochlef {

using json = nlohmann::ordered_json;

template <class F>
struct Session {
  std::map<std::string, GradedAlgebra<F>> algebras;
  std::map<std::string, AlgebraMorphism<F>> morphisms;
  std::map<std::string, PerfComplex<F>> complexes;
  std::map<std::string, DiagonalResolution<F>> resolutions;  // keyed by algebra
  std::map<std::string, CohomologyModel<F>> models;
  std::map<std::string, ModelMorphism<F>> model_morphisms;

  struct Task {
    std::string name;
    std::string kind;
    std::vector<std::pair<std::string, std::string>> inputs;
    int degree = -1;  // -1: use the session default
    int line = 0;
  };
  std::vector<Task> tasks;
};

namespace detail {

inline std::string at_line(int line) {
  return "line " + std::to_string(line) + ": ";
}

inline const TextField& need(const TextStanza& s, const std::string& key) {
  const TextField* f = s.find(key);
  if (!f) throw error(at_line(s.line) + "missing field '" + key + "'");
  return *f;
}

inline std::string need_name(const TextStanza& s, const std::string& key) {
  const TextField& f = need(s, key);
  if (f.is_array || f.items.size() != 1 || f.items[0].is_int ||
      f.items[0].text.empty())
    throw error(at_line(f.line) + "field '" + key + "' must be a name");
  return f.items[0].text;
}

inline long long need_int(const TextStanza& s, const std::string& key) {
  const TextField& f = need(s, key);
  if (f.is_array || f.items.size() != 1 || !f.items[0].is_int)
    throw error(at_line(f.line) + "field '" + key + "' must be an integer");
  return f.items[0].num;
}

inline long long int_or(const TextStanza& s, const std::string& key,
                        long long fallback) {
  return s.find(key) ? need_int(s, key) : fallback;
}

template <class F>
F parse_coeff(const TextValue& v, int line) {
  try {
    if (v.is_int) return F::from_string(std::to_string(v.num));
    return F::from_string(v.text);
  } catch (const error& e) {
    throw error(at_line(line) + e.what());
  }
}

inline void check_arity(const TextField& f, std::size_t n) {
  if (!f.is_array || f.items.size() != n)
    throw error(at_line(f.line) + "field '" + f.key + "' must be an array of " +
                std::to_string(n) + " entries");
}

inline long long item_int(const TextField& f, std::size_t idx) {
  if (!f.items[idx].is_int)
    throw error(at_line(f.line) + "entry " + std::to_string(idx) +
                " of '" + f.key + "' must be an integer");
  return f.items[idx].num;
}

// ---- serialization ---------------------------------------------------------

template <class F>
json vec_json(const SparseVec<F>& v) {
  json out = json::array();
  SparseVec<F> sorted = v;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [i, c] : sorted) out.push_back({i, c.str()});
  return out;
}

template <class F>
json mat_json(const SparseMatrix<F>& m) {
  std::vector<std::pair<std::pair<int, int>, F>> entries;
  m.for_each([&](int r, int c, const F& v) { entries.push_back({{r, c}, v}); });
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json list = json::array();
  for (const auto& [rc, v] : entries)
    list.push_back({rc.first, rc.second, v.str()});
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(list);
  return out;
}

}  // namespace detail

// ---- session construction ---------------------------------------------------

namespace detail {

template <class F>
GradedAlgebra<F> build_algebra(const Session<F>& s, const TextStanza& st) {
  std::string kind = need_name(st, "kind");
  auto lookup = [&](const std::string& nm, int line) -> const GradedAlgebra<F>& {
    auto it = s.algebras.find(nm);
    if (it == s.algebras.end())
      throw error(at_line(line) + "unknown algebra '" + nm + "'");
    return it->second;
  };
  if (kind == "field") return field_algebra<F>();
  if (kind == "path") {
    Quiver q;
    q.vertices = static_cast<int>(need_int(st, "vertices"));
    for (const TextField* f : st.all("arrow")) {
      check_arity(*f, 3);
      if (f->items[2].is_int || f->items[2].text.empty())
        throw error(at_line(f->line) + "arrow label must be a string");
      q.arrows.push_back({static_cast<int>(item_int(*f, 0)),
                          static_cast<int>(item_int(*f, 1)),
                          f->items[2].text});
    }
    return path_algebra<F>(q);
  }
  if (kind == "cyclic-group") {
    long long n = need_int(st, "order");
    if (n < 1 || n > 64) throw error(at_line(st.line) + "order out of range");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = (i + j) % static_cast<int>(n);
    return group_algebra<F>(table);
  }
  if (kind == "matrix")
    return matrix_algebra<F>(static_cast<int>(need_int(st, "size")));
  if (kind == "exterior")
    return exterior_algebra<F>(static_cast<int>(need_int(st, "generators")),
                               static_cast<int>(need_int(st, "generator-degree")));
  if (kind == "product" || kind == "tensor") {
    const TextField& f = need(st, "factors");
    if (!f.is_array || f.items.empty())
      throw error(at_line(f.line) + "field 'factors' must be a nonempty array");
    std::vector<GradedAlgebra<F>> factors;
    for (const auto& item : f.items) {
      if (item.is_int || item.text.empty())
        throw error(at_line(f.line) + "factors must be algebra names");
      factors.push_back(lookup(item.text, f.line));
    }
    if (kind == "product") return product_algebra<F>(factors);
    if (factors.size() != 2)
      throw error(at_line(f.line) + "tensor takes exactly two factors");
    return tensor(factors[0], factors[1]);
  }
  if (kind == "opposite") return opposite(lookup(need_name(st, "of"), st.line));
  if (kind == "table") {
    GradedAlgebra<F> a;
    const int n = static_cast<int>(need_int(st, "dim"));
    if (n < 1 || n > 4096) throw error(at_line(st.line) + "dim out of range");
    for (int i = 0; i < n; ++i) a.basis.push_back("b" + std::to_string(i));
    if (const TextField* f = st.find("basis")) {
      check_arity(*f, static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) a.basis[i] = f->items[i].show();
    }
    a.degree.assign(n, 0);
    if (const TextField* f = st.find("degree")) {
      check_arity(*f, static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        a.degree[i] = static_cast<int>(item_int(*f, i));
    }
    a.diff.assign(n, {});
    a.mul.assign(n, std::vector<SparseVec<F>>(n));
    for (const TextField* f : st.all("mul")) {
      check_arity(*f, 4);
      int i = static_cast<int>(item_int(*f, 0));
      int j = static_cast<int>(item_int(*f, 1));
      int k = static_cast<int>(item_int(*f, 2));
      if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw error(at_line(f->line) + "mul index out of range");
      a.mul[i][j].push_back({k, parse_coeff<F>(f->items[3], f->line)});
    }
    for (const TextField* f : st.all("unit")) {
      check_arity(*f, 2);
      int k = static_cast<int>(item_int(*f, 0));
      if (k < 0 || k >= n) throw error(at_line(f->line) + "unit index out of range");
      a.unit.push_back({k, parse_coeff<F>(f->items[1], f->line)});
    }
    for (const TextField* f : st.all("diff")) {
      check_arity(*f, 3);
      int i = static_cast<int>(item_int(*f, 0));
      int k = static_cast<int>(item_int(*f, 1));
      if (i < 0 || i >= n || k < 0 || k >= n)
        throw error(at_line(f->line) + "diff index out of range");
      a.diff[i].push_back({k, parse_coeff<F>(f->items[2], f->line)});
    }
    for (auto& row : a.mul)
      for (auto& cell : row) sv_normalize(cell);
    for (auto& dv : a.diff) sv_normalize(dv);
    sv_normalize(a.unit);
    return a;
  }
  throw error(at_line(st.line) + "unknown algebra kind '" + kind + "'");
}

template <class F>
CohomologyModel<F> build_model(const Session<F>& s, const TextStanza& st) {
  std::string kind = need_name(st, "kind");
  if (kind == "projective-space")
    return projective_space<F>(static_cast<int>(need_int(st, "n")));
  if (kind == "torus") return torus_surface<F>();
  if (kind == "product") {
    const TextField& f = need(st, "factors");
    check_arity(f, 2);
    auto get = [&](std::size_t i) -> const CohomologyModel<F>& {
      if (f.items[i].is_int || f.items[i].text.empty())
        throw error(at_line(f.line) + "factors must be model names");
      auto it = s.models.find(f.items[i].text);
      if (it == s.models.end())
        throw error(at_line(f.line) + "unknown model '" + f.items[i].text + "'");
      return it->second;
    };
    return product_model(get(0), get(1)).model;
  }
  if (kind == "table") {
    CohomologyModel<F> m;
    const int n = static_cast<int>(need_int(st, "dim"));
    if (n < 1 || n > 4096) throw error(at_line(st.line) + "dim out of range");
    for (int i = 0; i < n; ++i) m.ring.basis.push_back("c" + std::to_string(i));
    m.ring.degree.assign(n, 0);
    const TextField& dg = need(st, "degree");
    check_arity(dg, static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      m.ring.degree[i] = static_cast<int>(item_int(dg, i));
    m.ring.diff.assign(n, {});
    m.ring.mul.assign(n, std::vector<SparseVec<F>>(n));
    for (const TextField* f : st.all("mul")) {
      check_arity(*f, 4);
      int i = static_cast<int>(item_int(*f, 0));
      int j = static_cast<int>(item_int(*f, 1));
      int k = static_cast<int>(item_int(*f, 2));
      if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw error(at_line(f->line) + "mul index out of range");
      m.ring.mul[i][j].push_back({k, parse_coeff<F>(f->items[3], f->line)});
    }
    for (const TextField* f : st.all("unit")) {
      check_arity(*f, 2);
      m.ring.unit.push_back({static_cast<int>(item_int(*f, 0)),
                             parse_coeff<F>(f->items[1], f->line)});
    }
    for (const TextField* f : st.all("integral")) {
      check_arity(*f, 2);
      m.integral.push_back({static_cast<int>(item_int(*f, 0)),
                            parse_coeff<F>(f->items[1], f->line)});
    }
    for (const TextField* f : st.all("todd")) {
      check_arity(*f, 2);
      m.todd.push_back({static_cast<int>(item_int(*f, 0)),
                        parse_coeff<F>(f->items[1], f->line)});
    }
    m.top_degree = static_cast<int>(need_int(st, "top-degree"));
    for (auto& row : m.ring.mul)
      for (auto& cell : row) sv_normalize(cell);
    sv_normalize(m.ring.unit);
    sv_normalize(m.integral);
    sv_normalize(m.todd);
    return m;
  }
  throw error(at_line(st.line) + "unknown model kind '" + kind + "'");
}

template <class F>
SparseMatrix<F> build_entry_matrix(const TextStanza& st, int rows, int cols) {
  std::vector<Triplet<F>> t;
  for (const TextField* f : st.all("entry")) {
    check_arity(*f, 3);
    int i = static_cast<int>(item_int(*f, 0));
    int j = static_cast<int>(item_int(*f, 1));
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      throw error(at_line(f->line) + "entry index out of range");
    t.push_back({i, j, parse_coeff<F>(f->items[2], f->line)});
  }
  return SparseMatrix<F>::from_triplets(rows, cols, std::move(t));
}

}  // namespace detail

template <class F>
Session<F> build_session(const TextDocument& doc) {
  using detail::at_line;
  using detail::need_name;
  Session<F> s;
  std::set<std::string> names;
  auto claim = [&](const std::string& nm, int line) {
    if (!names.insert(nm).second)
      throw error(at_line(line) + "duplicate name '" + nm + "'");
  };
  auto algebra_of = [&](const std::string& nm, int line)
      -> const GradedAlgebra<F>& {
    auto it = s.algebras.find(nm);
    if (it == s.algebras.end())
      throw error(at_line(line) + "unknown algebra '" + nm + "'");
    return it->second;
  };
  int task_count = 0;
  for (const TextStanza& st : doc.stanzas) {
    if (st.kind == "algebra") {
      std::string nm = need_name(st, "name");
      claim(nm, st.line);
      auto a = detail::build_algebra(s, st);
      try {
        require_valid(a);
      } catch (const error& e) {
        throw error(at_line(st.line) + std::string(e.what()));
      }
      s.algebras.emplace(nm, std::move(a));
    } else if (st.kind == "morphism") {
      std::string nm = need_name(st, "name");
      claim(nm, st.line);
      std::string src = need_name(st, "source");
      std::string kind = st.find("kind") ? need_name(st, "kind") : "table";
      if (s.algebras.count(src)) {
        const auto& a = algebra_of(src, st.line);
        const auto& b = algebra_of(need_name(st, "target"), st.line);
        AlgebraMorphism<F> f{a, b, SparseMatrix<F>(0, 0)};
        if (kind == "identity") {
          f.matrix = SparseMatrix<F>::identity(a.dim());
        } else if (kind == "table") {
          f.matrix = detail::build_entry_matrix<F>(st, b.dim(), a.dim());
        } else {
          throw error(at_line(st.line) + "unknown morphism kind '" + kind + "'");
        }
        auto rep = validate(f);
        if (!rep.ok())
          throw error(at_line(st.line) + "invalid morphism: " +
                      rep.violations.front());
        s.morphisms.emplace(nm, std::move(f));
      } else if (s.models.count(src)) {
        const auto& x = s.models.at(src);
        std::string tgt = need_name(st, "target");
        if (!s.models.count(tgt))
          throw error(at_line(st.line) + "unknown model '" + tgt + "'");
        const auto& y = s.models.at(tgt);
        ModelMorphism<F> f{x, y, SparseMatrix<F>(0, 0)};
        if (kind == "identity") {
          f.pullback = SparseMatrix<F>::identity(x.dim());
        } else if (kind == "projective-self-map") {
          const TextField& df = detail::need(st, "d");
          if (df.is_array || df.items.size() != 1)
            throw error(at_line(df.line) + "field 'd' must be a scalar");
          f = projective_self_map(x, detail::parse_coeff<F>(df.items[0], df.line));
        } else if (kind == "torus-endomorphism") {
          const TextField& mf = detail::need(st, "matrix");
          detail::check_arity(mf, 4);
          f = torus_endomorphism(x,
                                 detail::parse_coeff<F>(mf.items[0], mf.line),
                                 detail::parse_coeff<F>(mf.items[1], mf.line),
                                 detail::parse_coeff<F>(mf.items[2], mf.line),
                                 detail::parse_coeff<F>(mf.items[3], mf.line));
        } else if (kind == "table") {
          f.pullback = detail::build_entry_matrix<F>(st, x.dim(), y.dim());
        } else {
          throw error(at_line(st.line) + "unknown morphism kind '" + kind + "'");
        }
        try {
          require_valid(f);
        } catch (const error& e) {
          throw error(at_line(st.line) + std::string(e.what()));
        }
        s.model_morphisms.emplace(nm, std::move(f));
      } else {
        throw error(at_line(st.line) + "unknown source '" + src + "'");
      }
    } else if (st.kind == "module" || st.kind == "bimodule") {
      std::string nm = need_name(st, "name");
      claim(nm, st.line);
      std::string kind = need_name(st, "kind");
      PerfComplex<F> x;
      const int position = static_cast<int>(detail::int_or(st, "position", 0));
      if (st.kind == "module") {
        const auto& a = algebra_of(need_name(st, "base"), st.line);
        if (kind == "free") {
          x = free_module(a, position);
        } else if (kind == "projective") {
          x = projective_module(a, static_cast<int>(detail::need_int(st, "index")),
                                position);
        } else {
          throw error(at_line(st.line) + "unknown module kind '" + kind + "'");
        }
      } else {
        if (kind == "graph") {
          std::string of = need_name(st, "of");
          auto it = s.morphisms.find(of);
          if (it == s.morphisms.end())
            throw error(at_line(st.line) + "unknown morphism '" + of + "'");
          x = graph_bimodule(it->second);
        } else if (kind == "diagonal") {
          const auto& a = algebra_of(need_name(st, "algebra"), st.line);
          AlgebraMorphism<F> id{a, a, SparseMatrix<F>::identity(a.dim())};
          x = graph_bimodule(id);
        } else if (kind == "projective") {
          const auto& a = algebra_of(need_name(st, "algebra"), st.line);
          x = projective_bimodule(a, static_cast<int>(detail::need_int(st, "left")),
                                  static_cast<int>(detail::need_int(st, "right")),
                                  position);
        } else {
          throw error(at_line(st.line) + "unknown bimodule kind '" + kind + "'");
        }
      }
      try {
        require_valid(x);
      } catch (const error& e) {
        throw error(at_line(st.line) + std::string(e.what()));
      }
      s.complexes.emplace(nm, std::move(x));
    } else if (st.kind == "resolution") {
      std::string an = need_name(st, "algebra");
      const auto& a = algebra_of(an, st.line);
      if (s.resolutions.count(an))
        throw error(at_line(st.line) + "duplicate resolution for '" + an + "'");
      DiagonalResolution<F> r;
      r.algebra = a;
      const int d = a.dim();
      for (const TextField* f : st.all("block")) {
        detail::check_arity(*f, 1);
        ResolutionBlock<F> blk;
        blk.position = static_cast<int>(detail::item_int(*f, 0));
        r.blocks.push_back(std::move(blk));
      }
      // tensor and map entries attach to blocks by index
      for (const TextField* f : st.all("tensor")) {
        detail::check_arity(*f, 4);
        int b = static_cast<int>(detail::item_int(*f, 0));
        int p = static_cast<int>(detail::item_int(*f, 1));
        int q = static_cast<int>(detail::item_int(*f, 2));
        if (b < 0 || b >= static_cast<int>(r.blocks.size()))
          throw error(at_line(f->line) + "block index out of range");
        if (p < 0 || p >= d || q < 0 || q >= d)
          throw error(at_line(f->line) + "tensor index out of range");
        r.blocks[b].tensor.push_back(
            {p * d + q, detail::parse_coeff<F>(f->items[3], f->line)});
      }
      for (const TextField* f : st.all("map")) {
        detail::check_arity(*f, 5);
        int to = static_cast<int>(detail::item_int(*f, 0));
        int from = static_cast<int>(detail::item_int(*f, 1));
        int c = static_cast<int>(detail::item_int(*f, 2));
        int e = static_cast<int>(detail::item_int(*f, 3));
        if (to < 0 || to >= static_cast<int>(r.blocks.size()) || from < 0 ||
            from >= static_cast<int>(r.blocks.size()))
          throw error(at_line(f->line) + "block index out of range");
        if (c < 0 || c >= d || e < 0 || e >= d)
          throw error(at_line(f->line) + "tensor index out of range");
        r.diff[{to, from}].push_back(
            {c * d + e, detail::parse_coeff<F>(f->items[4], f->line)});
      }
      for (auto& blk : r.blocks) sv_normalize(blk.tensor);
      for (auto& [k, v] : r.diff) sv_normalize(v);
      try {
        require_valid(r);
      } catch (const error& e) {
        throw error(at_line(st.line) + std::string(e.what()));
      }
      s.resolutions.emplace(an, std::move(r));
    } else if (st.kind == "cohomology-model") {
      if constexpr (!std::is_same_v<F, Rational>) {
        throw error(at_line(st.line) +
                    "cohomology models require the rational field");
      } else {
        std::string nm = need_name(st, "name");
        claim(nm, st.line);
        auto m = detail::build_model(s, st);
        try {
          require_valid(m);
        } catch (const error& e) {
          throw error(at_line(st.line) + std::string(e.what()));
        }
        s.models.emplace(nm, std::move(m));
      }
    } else if (st.kind == "task") {
      typename Session<F>::Task t;
      ++task_count;
      t.name = st.find("name") ? need_name(st, "name")
                               : "task" + std::to_string(task_count);
      claim(t.name, st.line);
      t.kind = need_name(st, "kind");
      t.line = st.line;
      t.degree = static_cast<int>(detail::int_or(st, "degree", -1));
      for (const char* key : {"algebra", "bimodule", "module", "module2",
                              "morphism", "f", "g"})
        if (st.find(key)) t.inputs.push_back({key, need_name(st, key)});
      s.tasks.push_back(std::move(t));
    } else {
      throw error(at_line(st.line) + "unknown stanza '" + st.kind + "'");
    }
  }
  return s;
}

// ---- task execution ----------------------------------------------------------

namespace detail {

template <class F>
const GradedAlgebra<F>& task_algebra(const Session<F>& s,
                                     const typename Session<F>::Task& t,
                                     const std::string& key = "algebra") {
  for (const auto& [k, v] : t.inputs)
    if (k == key) {
      auto it = s.algebras.find(v);
      if (it == s.algebras.end())
        throw error("unknown algebra '" + v + "'");
      return it->second;
    }
  throw error("task '" + t.name + "' needs field '" + key + "'");
}

template <class F>
const PerfComplex<F>& task_complex(const Session<F>& s,
                                   const typename Session<F>::Task& t,
                                   const std::string& key) {
  for (const auto& [k, v] : t.inputs)
    if (k == key) {
      auto it = s.complexes.find(v);
      if (it == s.complexes.end())
        throw error("unknown module '" + v + "'");
      return it->second;
    }
  throw error("task '" + t.name + "' needs field '" + key + "'");
}

template <class F>
const ModelMorphism<F>& task_model_morphism(const Session<F>& s,
                                            const typename Session<F>::Task& t,
                                            const std::string& key) {
  for (const auto& [k, v] : t.inputs)
    if (k == key) {
      auto it = s.model_morphisms.find(v);
      if (it == s.model_morphisms.end())
        throw error("unknown model morphism '" + v + "'");
      return it->second;
    }
  throw error("task '" + t.name + "' needs field '" + key + "'");
}

template <class F>
json run_one_task(const Session<F>& s, const typename Session<F>::Task& t,
                  int default_degree, bool& pass) {
  json out;
  out["name"] = t.name;
  out["kind"] = t.kind;
  json inputs;
  for (const auto& [k, v] : t.inputs) inputs[k] = v;
  out["inputs"] = std::move(inputs);
  const int degree = t.degree >= 0 ? t.degree : default_degree;
  pass = true;

  if (t.kind == "hh") {
    const auto& a = task_algebra(s, t);
    auto bar = hh_dims(a, degree);
    out["dims"] = bar.dims;
    out["certified"] = bar.certified;
    out["note"] = bar.note;
    bool have_res = false;
    HHResult res;
    std::string an;
    for (const auto& [k, v] : t.inputs)
      if (k == "algebra") an = v;
    auto it = s.resolutions.find(an);
    if (it != s.resolutions.end()) {
      res = hh_via_resolution(it->second, diagonal_bimodule(a), degree);
      have_res = true;
    } else if (a.is_degree_zero()) {
      try {
        res = hh_via_resolution(a, diagonal_bimodule(a), degree);
        have_res = true;
      } catch (const error& e) {
        if (std::string(e.what()) !=
            "no resolution constructor; supply one in the input file")
          throw;
      }
    }
    if (have_res) {
      out["resolution_dims"] = res.dims;
      out["pipelines_agree"] = bar.dims == res.dims;
      pass = bar.certified && bar.dims == res.dims;
    }
  } else if (t.kind == "euler") {
    bool is_bimodule = false;
    for (const auto& [k, v] : t.inputs) is_bimodule |= (k == "bimodule");
    const auto& x = task_complex(s, t, is_bimodule ? "bimodule" : "module");
    if (x.left) {
      auto prime = euler_class_prime(x);
      out["total"] = vec_json(prime.total.coordinates);
      out["matrix"] = mat_json(prime.matrix);
    } else {
      out["coordinates"] = vec_json(euler_class(x).coordinates);
    }
  } else if (t.kind == "pairing") {
    const auto& a = task_algebra(s, t);
    const auto& n = task_complex(s, t, "module");
    const auto& m = task_complex(s, t, "module2");
    F v = pairing(a, euler_class(n), euler_class(m));
    out["value"] = v.str();
  } else if (t.kind == "verify-lfp") {
    const auto& m = task_complex(s, t, "bimodule");
    if (!m.left) throw error("bimodule complex required");
    auto rep = verify_lfp(*m.left, m);
    out["dims"] = rep.dims;
    out["lhs"] = std::to_string(rep.lhs);
    out["rhs"] = rep.rhs.str();
    pass = rep.equal;
  } else if (t.kind == "verify-hrr") {
    const auto& a = task_algebra(s, t);
    const auto& n = task_complex(s, t, "module");
    const auto& m = task_complex(s, t, "module2");
    auto rep = verify_hrr(a, n, m);
    out["chi"] = std::to_string(rep.chi);
    out["pairing_value"] = rep.pairing_value.str();
    pass = rep.equal;
  } else if (t.kind == "verify-nondeg") {
    const auto& a = task_algebra(s, t);
    auto rep = verify_nondegenerate(a, degree);
    out["gram"] = mat_json(rep.gram);
    out["invertible"] = rep.invertible;
    out["higher_a"] = rep.higher_a;
    out["higher_aop"] = rep.higher_aop;
    auto sym = verify_pairing_symmetry(a);
    out["symmetric"] = sym.pass;
    pass = rep.pass && sym.pass;
  } else if (t.kind == "verify-main-lemma") {
    const auto& x = task_complex(s, t, "bimodule");
    if (!x.left) throw error("bimodule complex required");
    auto rep = verify_main_lemma(*x.left, x.base, x, degree);
    json direct = json::array();
    json conv = json::array();
    for (const auto& m : rep.direct) direct.push_back(mat_json(m));
    for (const auto& m : rep.convolution) conv.push_back(mat_json(m));
    out["direct"] = std::move(direct);
    out["convolution"] = std::move(conv);
    pass = rep.pass;
  } else if (t.kind == "coh-lefschetz") {
    const auto& f = task_model_morphism(s, t, "morphism");
    auto rep = lefschetz_number(f);
    out["pullback_trace"] = rep.pull_trace.str();
    out["pushforward_trace"] = rep.push_trace.str();
    out["kernel_trace"] = rep.kernel_trace.str();
    pass = rep.consistent;
  } else if (t.kind == "coh-two-maps") {
    const auto& f = task_model_morphism(s, t, "f");
    const auto& g = task_model_morphism(s, t, "g");
    auto rep = verify_two_maps(f, g);
    out["lhs"] = rep.lhs.str();
    out["rhs"] = rep.rhs.str();
    pass = rep.pass;
  } else if (t.kind == "coh-lemmas") {
    const auto& f = task_model_morphism(s, t, "morphism");
    auto rep = verify_cohomological_lemmas(f);
    out["forward_operator"] = mat_json(rep.forward_operator);
    out["forward_formula"] = mat_json(rep.forward_formula);
    out["backward_operator"] = mat_json(rep.backward_operator);
    out["backward_formula"] = mat_json(rep.backward_formula);
    pass = rep.pass;
  } else {
    throw error(at_line(t.line) + "unknown task kind '" + t.kind + "'");
  }
  out["pass"] = pass;
  return out;
}

}  // namespace detail

struct SessionConfig {
  std::string field = "q";  // "q" or "fp:<p>"
  int max_bar = 2;
  std::string fixture;
  std::string task_filter;  // empty: run all tasks
};

// Runs the tasks of a built session; returns the report document and sets
// all_pass.  Throws hochlef::error for input problems.
template <class F>
json run_session(const Session<F>& s, const SessionConfig& cfg,
                 bool& all_pass) {
  json report;
  report["format_version"] = 1;
  report["field"] = cfg.field;
  report["max_bar"] = cfg.max_bar;
  report["fixture"] = cfg.fixture;
  json tasks = json::array();
  all_pass = true;
  bool matched = cfg.task_filter.empty();
  for (const auto& t : s.tasks) {
    if (!cfg.task_filter.empty() && t.name != cfg.task_filter) continue;
    matched = true;
    bool pass = false;
    tasks.push_back(detail::run_one_task(s, t, cfg.max_bar, pass));
    all_pass = all_pass && pass;
  }
  if (!matched)
    throw error("no task named '" + cfg.task_filter + "' in the fixture");
  report["tasks"] = std::move(tasks);
  report["pass"] = all_pass;
  return report;
}

}  // namespace hochlef
