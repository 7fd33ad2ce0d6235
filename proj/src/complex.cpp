// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tphi/complex.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tphi/text_io.hpp"

namespace tphi {

namespace {

// Sorts the rows of a flat array of fixed width lexicographically and drops
// duplicate rows.
void SortFlat(std::vector<VertexId>& flat, std::size_t width) {
  const std::size_t rows = flat.size() / width;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * width); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(width));
  });
  std::vector<VertexId> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < rows; ++k) {
    auto src = row(order[k]);
    if (!out.empty() && std::equal(src, src + static_cast<std::ptrdiff_t>(width),
                                   out.end() - static_cast<std::ptrdiff_t>(width))) {
      continue;
    }
    out.insert(out.end(), src, src + static_cast<std::ptrdiff_t>(width));
  }
  flat = std::move(out);
}

}  // namespace

SimplicialComplex SimplicialComplex::FromClosedFlat(std::vector<std::string> labels,
                                                    std::vector<std::vector<VertexId>> by_dim) {
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  for (std::size_t d = 0; d < by_dim.size(); ++d) SortFlat(by_dim[d], d + 1);
  c.faces_ = std::move(by_dim);
  return c;
}

SimplicialComplex SimplicialComplex::FromFacets(std::vector<std::string> labels,
                                                const std::vector<Simplex>& facets) {
  std::vector<std::vector<VertexId>> by_dim;
  for (Simplex s : facets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 30) throw Error(ErrorKind::kSizeCapExceeded, "facet of more than 30 vertices");
    for (VertexId v : s) {
      if (v >= labels.size()) throw Error(ErrorKind::kIndexOutOfRange, "facet vertex out of range");
    }
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    const std::uint32_t subsets = 1U << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      auto& dst = by_dim[static_cast<std::size_t>(__builtin_popcount(mask)) - 1];
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1U << i)) dst.push_back(s[i]);
      }
    }
  }
  return FromClosedFlat(std::move(labels), std::move(by_dim));
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return faces_[static_cast<std::size_t>(d)].size() / (static_cast<std::size_t>(d) + 1);
}

std::size_t SimplicialComplex::total() const {
  std::size_t t = 0;
  for (int d = 0; d <= dimension(); ++d) t += count(d);
  return t;
}

std::optional<std::size_t> SimplicialComplex::Find(std::span<const VertexId> s) const {
  if (s.empty()) return std::nullopt;
  const int d = static_cast<int>(s.size()) - 1;
  if (d > dimension()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count(d);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto row = simplex(d, mid);
    if (std::lexicographical_compare(row.begin(), row.end(), s.begin(), s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count(d)) {
    auto row = simplex(d, lo);
    if (std::equal(row.begin(), row.end(), s.begin(), s.end())) return lo;
  }
  return std::nullopt;
}

std::vector<Simplex> SimplicialComplex::Maximal() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::vector<char> has_coface(count(d), 0);
    if (d < dimension()) {
      Simplex face(static_cast<std::size_t>(d) + 1);
      for (std::size_t j = 0; j < count(d + 1); ++j) {
        auto big = simplex(d + 1, j);
        for (std::size_t skip = 0; skip < big.size(); ++skip) {
          std::size_t w = 0;
          for (std::size_t i = 0; i < big.size(); ++i) {
            if (i != skip) face[w++] = big[i];
          }
          has_coface[*Find(face)] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < count(d); ++i) {
      if (!has_coface[i]) {
        auto s = simplex(d, i);
        out.emplace_back(s.begin(), s.end());
      }
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::Relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw Error(ErrorKind::kLengthMismatch, "relabel size mismatch");
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.faces_ = faces_;
  return c;
}

std::vector<std::string> SimplicialComplex::CanonicalLines() const {
  std::vector<std::string> lines;
  lines.reserve(total());
  std::vector<std::string_view> names;
  for (int d = 0; d <= dimension(); ++d) {
    for (std::size_t i = 0; i < count(d); ++i) {
      names.clear();
      for (VertexId v : simplex(d, i)) names.emplace_back(labels_[v]);
      std::sort(names.begin(), names.end());
      std::string line;
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (k > 0) line += ' ';
        line += names[k];
      }
      lines.push_back(std::move(line));
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string SimplicialComplex::ToText() const {
  std::string out;
  for (const std::string& line : CanonicalLines()) {
    out += line;
    out += '\n';
  }
  return out;
}

SimplicialComplex SimplicialComplex::Parse(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Simplex> simplices;
  for (const SourceLine& line : ReadContentLines(in)) {
    Simplex s;
    for (std::string_view tok : SplitWhitespace(line.text)) {
      std::string name(tok);
      auto [it, inserted] = index.emplace(name, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(name);
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  // Vertex ids follow label order so the result does not depend on line order.
  std::vector<VertexId> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
  std::vector<VertexId> remap(labels.size());
  std::vector<std::string> sorted_labels(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<VertexId>(i);
    sorted_labels[i] = labels[order[i]];
  }
  for (Simplex& s : simplices) {
    for (VertexId& v : s) v = remap[v];
  }
  return FromFacets(std::move(sorted_labels), simplices);
}

std::uint64_t count_chains(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> below_count(n);
  for (ElementId e = 0; e < n; ++e) below_count[e] = p.Below(e).size();
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return below_count[a] < below_count[b]; });
  // ending[x] = number of chains whose top is x.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ending(n, 0);
  std::uint64_t total = 0;
  for (ElementId x : order) {
    unsigned __int128 c = 1;
    for (ElementId y = 0; y < n; ++y) {
      if (p.Less(y, x)) c += ending[y];
    }
    ending[x] = c > kMax ? kMax : static_cast<std::uint64_t>(c);
    unsigned __int128 t = static_cast<unsigned __int128>(total) + ending[x];
    total = t > kMax ? kMax : static_cast<std::uint64_t>(t);
  }
  return total;
}

SimplicialComplex order_complex(const FinitePoset& p, std::size_t cap, Exec exec) {
  const std::uint64_t chains = count_chains(p);
  if (chains > cap) {
    throw Error(ErrorKind::kSizeCapExceeded, "order complex has " + std::to_string(chains) +
                                                 " simplices, cap is " + std::to_string(cap));
  }
  const std::size_t n = p.size();
  std::vector<ElementSet> above(n);
  for (ElementId e = 0; e < n; ++e) above[e] = p.Above(e);

  std::vector<std::vector<VertexId>> by_dim;
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel if (parallel)
  {
    std::vector<std::vector<VertexId>> local;
    std::vector<VertexId> chain;
    std::vector<VertexId> sorted;
    std::vector<std::size_t> cursor;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t start = 0; start < static_cast<std::int64_t>(n); ++start) {
      // Each chain is produced once, from its least element upward.
      auto record = [&] {
        sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        if (local.size() < sorted.size()) local.resize(sorted.size());
        auto& dst = local[sorted.size() - 1];
        dst.insert(dst.end(), sorted.begin(), sorted.end());
      };
      chain.assign(1, static_cast<VertexId>(start));
      cursor.assign(1, 0);
      record();
      while (!chain.empty()) {
        const ElementSet& next = above[chain.back()];
        std::size_t& pos = cursor.back();
        if (pos < next.size()) {
          chain.push_back(next[pos++]);
          cursor.push_back(0);
          record();
        } else {
          chain.pop_back();
          cursor.pop_back();
        }
      }
    }
#pragma omp critical
    {
      if (by_dim.size() < local.size()) by_dim.resize(local.size());
      for (std::size_t d = 0; d < local.size(); ++d) {
        by_dim[d].insert(by_dim[d].end(), local[d].begin(), local[d].end());
      }
    }
  }
  return SimplicialComplex::FromClosedFlat(p.labels(), std::move(by_dim));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> left(a.labels().begin(), a.labels().end());
  bool clash = std::any_of(b.labels().begin(), b.labels().end(),
                           [&](const std::string& l) { return left.count(l) > 0; });
  std::vector<std::string> labels;
  labels.reserve(a.vertex_count() + b.vertex_count());
  for (const std::string& l : a.labels()) labels.push_back(clash ? "L." + l : l);
  for (const std::string& l : b.labels()) labels.push_back(clash ? "R." + l : l);

  const auto offset = static_cast<VertexId>(a.vertex_count());
  const int dim = a.dimension() + b.dimension() + 1;
  std::vector<std::vector<VertexId>> by_dim(static_cast<std::size_t>(std::max(dim + 1, 0)));
  // da or db == -1 stands for the empty simplex.
  for (int da = -1; da <= a.dimension(); ++da) {
    const std::size_t na = da < 0 ? 1 : a.count(da);
    for (int db = -1; db <= b.dimension(); ++db) {
      if (da < 0 && db < 0) continue;
      const std::size_t nb = db < 0 ? 1 : b.count(db);
      auto& dst = by_dim[static_cast<std::size_t>(da + db + 1)];
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
          if (da >= 0) {
            auto s = a.simplex(da, i);
            dst.insert(dst.end(), s.begin(), s.end());
          }
          if (db >= 0) {
            for (VertexId v : b.simplex(db, j)) dst.push_back(v + offset);
          }
        }
      }
    }
  }
  return SimplicialComplex::FromClosedFlat(std::move(labels), std::move(by_dim));
}

SimplicialComplex point_set(std::size_t k, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> by_dim(k > 0 ? 1 : 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(prefix + std::to_string(i));
    by_dim[0].push_back(static_cast<VertexId>(i));
  }
  return SimplicialComplex::FromClosedFlat(std::move(labels), std::move(by_dim));
}

std::int64_t euler_characteristic(const SimplicialComplex& c) {
  std::int64_t chi = 0;
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto n = static_cast<std::int64_t>(c.count(d));
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

FinitePoset face_poset(const SimplicialComplex& c) {
  std::vector<Simplex> simplices;
  std::vector<std::string> labels;
  for (int d = 0; d <= c.dimension(); ++d) {
    for (std::size_t i = 0; i < c.count(d); ++i) {
      auto s = c.simplex(d, i);
      simplices.emplace_back(s.begin(), s.end());
      std::vector<std::string> names;
      for (VertexId v : s) names.push_back(c.labels()[v]);
      std::sort(names.begin(), names.end());
      std::string label = "{";
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (k > 0) label += ',';
        label += names[k];
      }
      labels.push_back(label + "}");
    }
  }
  return FinitePoset::FromRelation(std::move(labels), [&](ElementId a, ElementId b) {
    const Simplex& sa = simplices[a];
    const Simplex& sb = simplices[b];
    return sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  });
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c, std::size_t cap) {
  return order_complex(face_poset(c), cap);
}

const char* CertificateKindName(CollapseCertificate::Kind kind) {
  switch (kind) {
    case CollapseCertificate::Kind::kCone: return "cone-apex";
    case CollapseCertificate::Kind::kCollapse: return "collapse-sequence";
    case CollapseCertificate::Kind::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<VertexId> find_cone_apex(const SimplicialComplex& c) {
  if (c.vertex_count() == 0 || c.dimension() < 0) return std::nullopt;
  std::vector<char> candidate(c.vertex_count(), 1);
  for (const Simplex& m : c.Maximal()) {
    std::vector<char> in(c.vertex_count(), 0);
    for (VertexId v : m) in[v] = 1;
    for (std::size_t v = 0; v < candidate.size(); ++v) candidate[v] &= in[v];
  }
  for (std::size_t v = 0; v < candidate.size(); ++v) {
    if (candidate[v]) return static_cast<VertexId>(v);
  }
  return std::nullopt;
}

CollapseCertificate collapse_certify(const SimplicialComplex& c, bool with_steps) {
  CollapseCertificate cert;
  if (auto apex = find_cone_apex(c)) {
    cert.kind = CollapseCertificate::Kind::kCone;
    cert.apex = apex;
    cert.step_count = (c.total() - 1) / 2;
    cert.remaining = 1;
    if (with_steps) {
      // Pair each face sigma of the base with sigma + apex, largest first.
      for (int d = c.dimension(); d >= 0; --d) {
        for (std::size_t i = 0; i < c.count(d); ++i) {
          auto s = c.simplex(d, i);
          if (std::binary_search(s.begin(), s.end(), *apex)) continue;
          Simplex face(s.begin(), s.end());
          Simplex coface = face;
          coface.insert(std::upper_bound(coface.begin(), coface.end(), *apex), *apex);
          cert.steps.push_back({std::move(face), std::move(coface)});
        }
      }
    }
    return cert;
  }

  // Global ids: dimension offsets.
  const int top = c.dimension();
  std::vector<std::size_t> offset(static_cast<std::size_t>(top) + 2, 0);
  for (int d = 0; d <= top; ++d) offset[static_cast<std::size_t>(d) + 1] = offset[static_cast<std::size_t>(d)] + c.count(d);
  const std::size_t total = offset.back();
  auto dim_of = [&](std::size_t id) {
    return static_cast<int>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin()) - 1;
  };
  auto vertices = [&](std::size_t id) {
    int d = dim_of(id);
    return c.simplex(d, id - offset[static_cast<std::size_t>(d)]);
  };
  // facets[id] in CSR over (d+1) facets of each d-simplex, d >= 1.
  std::vector<std::size_t> facet_start(total + 1, 0);
  for (std::size_t id = 0; id < total; ++id) {
    int d = dim_of(id);
    facet_start[id + 1] = facet_start[id] + (d >= 1 ? static_cast<std::size_t>(d) + 1 : 0);
  }
  std::vector<std::size_t> facets(facet_start.back());
  std::vector<std::uint32_t> cof_count(total, 0);
  Simplex face;
  for (std::size_t id = 0; id < total; ++id) {
    int d = dim_of(id);
    if (d < 1) continue;
    auto s = vertices(id);
    face.resize(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) face[w++] = s[i];
      }
      std::size_t fid = offset[static_cast<std::size_t>(d) - 1] + *c.Find(face);
      facets[facet_start[id] + skip] = fid;
      ++cof_count[fid];
    }
  }
  std::vector<std::size_t> cof_start(total + 1, 0);
  for (std::size_t id = 0; id < total; ++id) cof_start[id + 1] = cof_start[id] + cof_count[id];
  std::vector<std::size_t> cofacets(cof_start.back());
  {
    std::vector<std::size_t> fill(cof_start.begin(), cof_start.end() - 1);
    for (std::size_t id = 0; id < total; ++id) {
      for (std::size_t k = facet_start[id]; k < facet_start[id + 1]; ++k) cofacets[fill[facets[k]]++] = id;
    }
  }

  std::vector<char> alive(total, 1);
  std::deque<std::size_t> work;
  for (std::size_t id = 0; id < total; ++id) {
    if (cof_count[id] == 1) work.push_back(id);
  }
  auto push_facets = [&](std::size_t id) {
    for (std::size_t k = facet_start[id]; k < facet_start[id + 1]; ++k) {
      if (alive[facets[k]] && cof_count[facets[k]] == 1) work.push_back(facets[k]);
    }
  };
  auto drop_cofacet = [&](std::size_t f) {
    --cof_count[f];
    if (!alive[f]) return;
    if (cof_count[f] == 1) work.push_back(f);
    if (cof_count[f] == 0) push_facets(f);
  };
  std::size_t remaining = total;
  while (!work.empty()) {
    std::size_t sigma = work.front();
    work.pop_front();
    if (!alive[sigma] || cof_count[sigma] != 1) continue;
    std::size_t tau = total;
    for (std::size_t k = cof_start[sigma]; k < cof_start[sigma + 1]; ++k) {
      if (alive[cofacets[k]]) {
        tau = cofacets[k];
        break;
      }
    }
    if (tau == total || cof_count[tau] != 0) continue;
    alive[sigma] = 0;
    alive[tau] = 0;
    remaining -= 2;
    ++cert.step_count;
    if (with_steps) {
      auto fs = vertices(sigma);
      auto ts = vertices(tau);
      cert.steps.push_back({Simplex(fs.begin(), fs.end()), Simplex(ts.begin(), ts.end())});
    }
    for (std::size_t k = facet_start[tau]; k < facet_start[tau + 1]; ++k) {
      if (facets[k] != sigma) drop_cofacet(facets[k]);
    }
    for (std::size_t k = facet_start[sigma]; k < facet_start[sigma + 1]; ++k) drop_cofacet(facets[k]);
  }
  cert.remaining = remaining;
  cert.kind = remaining == 1 ? CollapseCertificate::Kind::kCollapse : CollapseCertificate::Kind::kInconclusive;
  return cert;
}

}  // namespace tphi
