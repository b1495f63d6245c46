// Copyright 2026 The acspin Authors
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


#include "acspin/dd_sequence.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Geometry>
#include <json.hpp>

#include "acspin/ensemble.hpp"
#include "acspin/error.hpp"

namespace acspin {

namespace {

using Ops = std::vector<std::array<CMatrix, 3>>;

Ops site_ops(int n) {
  Ops ops(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a) ops[i][a] = site_operator(n, i, a);
  return ops;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    v = Vec3(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

CMatrix along(const std::array<CMatrix, 3>& j, const Vec3& e) { return e(0) * j[0] + e(1) * j[1] + e(2) * j[2]; }

// 3 j_i . M j_k - j_i . j_k
CMatrix pair_term(const Ops& ops, int i, int k, const Mat3& m) {
  CMatrix out = CMatrix::Zero(ops[0][0].rows(), ops[0][0].cols());
  for (int a = 0; a < 3; ++a) {
    out -= ops[i][a] * ops[k][a];
    for (int b = 0; b < 3; ++b)
      if (m(a, b) != 0.0) out += 3.0 * m(a, b) * ops[i][a] * ops[k][b];
  }
  return out;
}

const std::map<std::string, NoiseFamily>& family_names() {
  static const std::map<std::string, NoiseFamily> names{{"disorder", NoiseFamily::disorder},
                                                        {"dipolar_rwa", NoiseFamily::dipolar_rwa},
                                                        {"dipolar_general", NoiseFamily::dipolar_general},
                                                        {"rotation_fde", NoiseFamily::rotation_fde}};
  return names;
}

struct Walk {
  bool closed = false;
  bool eulerian = false;
};

Walk check_walk(const DDSequence& seq) {
  const std::size_t g = seq.group.size();
  const std::size_t k = seq.generators.size();
  std::vector<Mat3> gens;
  for (const auto& a : seq.generators) gens.push_back(rotation_matrix(a.axis, a.angle));
  std::vector<char> used(g * k, 0);
  bool eulerian = seq.pulse_order.size() == g * k;
  int v = 0;
  for (int p : seq.pulse_order) {
    if (p < 0 || p >= static_cast<int>(k)) return {};
    const int next = find_element(seq.group, gens[p] * seq.group[v]);
    if (next < 0) return {};
    char& e = used[static_cast<std::size_t>(v) * k + p];
    if (e) eulerian = false;
    e = 1;
    v = next;
  }
  return {v == 0, eulerian && v == 0};
}

}  // namespace

std::string to_string(NoiseFamily f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  return "unknown";
}

NoiseFamily family_from_string(const std::string& s) {
  const auto it = family_names().find(s);
  require(it != family_names().end(), ErrorCode::parse, "unknown noise family: " + s);
  return it->second;
}

CMatrix sample_family(NoiseFamily f, int n, std::uint64_t seed) {
  require(n >= 2 || f == NoiseFamily::disorder, ErrorCode::invalid_argument,
          "sample_family: pair families need at least two spins");
  const Ops ops = site_ops(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::Index d = ensemble_dim(n);
  CMatrix h = CMatrix::Zero(d, d);
  switch (f) {
    case NoiseFamily::disorder:
      for (int i = 0; i < n; ++i) {
        const double delta = u(rng);
        h += delta * along(ops[i], random_unit(rng));
      }
      break;
    case NoiseFamily::dipolar_rwa:
    case NoiseFamily::dipolar_general:
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
          const double c = u(rng);
          const Vec3 e = f == NoiseFamily::dipolar_rwa ? Vec3::UnitZ() : random_unit(rng);
          h += c * pair_term(ops, i, k, e * e.transpose());
        }
      break;
    case NoiseFamily::rotation_fde: {
      const Vec3 m = random_unit(rng);
      Mat3 a;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a(r, c) = u(rng);
      Mat3 big_m = 0.5 * (a + a.transpose());
      big_m -= (big_m.trace() - 1.0) / 3.0 * Mat3::Identity();
      for (int i = 0; i < n; ++i) {
        const double delta = u(rng);
        h += delta * along(ops[i], m);
      }
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
          const double c = u(rng);
          h += c * pair_term(ops, i, k, big_m);
        }
      break;
    }
  }
  const double norm = operator_norm(h);
  require(norm > 0.0, ErrorCode::invalid_argument, "sample_family: degenerate draw");
  return h / norm;
}

std::vector<int> eulerian_order(std::span<const Mat3> group, std::span<const Mat3> generators) {
  const std::size_t g = group.size();
  const std::size_t k = generators.size();
  require(g >= 1 && k >= 1, ErrorCode::invalid_argument, "eulerian_order: empty group or generator list");
  require(find_element(group.subspan(0, 1), Mat3::Identity()) == 0, ErrorCode::invalid_argument,
          "eulerian_order: group must list the identity first");
  // adj[v][l] = target of edge (v, l)
  std::vector<std::vector<int>> adj(g, std::vector<int>(k));
  for (std::size_t v = 0; v < g; ++v)
    for (std::size_t l = 0; l < k; ++l) {
      adj[v][l] = find_element(group, generators[l] * group[v]);
      require(adj[v][l] >= 0, ErrorCode::invalid_argument, "eulerian_order: generators leave the group");
    }

  // Hierholzer. Every vertex has in- and out-degree k, so a closed walk exists
  // once the graph is connected, which holds when the generators generate.
  std::vector<std::size_t> next_edge(g, 0);
  std::vector<std::pair<int, int>> stack{{0, -1}};  // (vertex, edge label that led here)
  std::vector<int> labels;
  while (!stack.empty()) {
    const int v = stack.back().first;
    if (next_edge[v] < k) {
      const int l = static_cast<int>(next_edge[v]++);
      stack.push_back({adj[v][l], l});
    } else {
      if (stack.back().second >= 0) labels.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  require(labels.size() == g * k, ErrorCode::invalid_argument, "eulerian_order: generators do not generate the group");
  return {labels.rbegin(), labels.rend()};
}

DDSequence make_sequence(std::string name, std::vector<AxisAngle> generators, std::vector<NoiseFamily> families) {
  require(!generators.empty(), ErrorCode::invalid_argument, "make_sequence: no generators");
  DDSequence seq;
  seq.name = std::move(name);
  std::vector<Mat3> mats;
  for (std::size_t l = 0; l < generators.size(); ++l) {
    AxisAngle a = generators[l];
    a.axis.normalize();
    seq.generators.push_back(a);
    seq.labels.push_back(std::string(1, static_cast<char>('a' + l)));
    mats.push_back(rotation_matrix(a.axis, a.angle));
  }
  seq.group = generate_group(mats);
  seq.pulse_order = eulerian_order(seq.group, mats);
  seq.families = std::move(families);
  return seq;
}

double verify_decoupling(const DDSequence& seq, NoiseFamily family, int n_spins, int samples, std::uint64_t seed) {
  require(samples >= 1, ErrorCode::invalid_argument, "verify_decoupling: need at least one sample");
  const CollectiveOperators j = collective_operators(n_spins);
  const std::vector<CMatrix> reps = represent_group(seq.group, j.jx.matrix(), j.jy.matrix(), j.jz.matrix());
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const CMatrix h = sample_family(family, n_spins, seed + static_cast<std::uint64_t>(s));
    worst = std::max(worst, operator_norm(symmetrize(reps, h)) / operator_norm(h));
  }
  return worst;
}

SequenceCheck validate_sequence(const DDSequence& seq, int n_spins) {
  SequenceCheck out;
  const Walk w = check_walk(seq);
  out.closed = w.closed;
  out.eulerian = w.eulerian;
  out.order_ok = seq.pulse_order.size() == seq.group.size() * seq.generators.size();
  for (NoiseFamily f : seq.families) out.residuals.push_back({f, verify_decoupling(seq, f, n_spins)});

  std::ostringstream msg;
  if (!out.closed) msg << "pulse order does not return to the identity; ";
  if (!out.eulerian) msg << "pulse order is not an Eulerian cycle of the Cayley graph; ";
  if (!out.order_ok) msg << "pulse count is not |G| x generators; ";
  for (const auto& [f, r] : out.residuals)
    if (!(r < kDecouplingTol)) msg << to_string(f) << " residual " << r << " exceeds " << kDecouplingTol << "; ";
  out.message = msg.str();
  out.ok = out.message.empty();
  return out;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string sequence_to_json(const DDSequence& seq) {
  nlohmann::ordered_json doc;
  doc["schema"] = "acspin.ddseq/1";
  doc["name"] = seq.name;
  doc["group_order"] = seq.group.size();
  doc["generators"] = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < seq.generators.size(); ++l) {
    const AxisAngle& a = seq.generators[l];
    doc["generators"].push_back(
        {{"label", seq.labels[l]}, {"axis", {a.axis(0), a.axis(1), a.axis(2)}}, {"angle", a.angle}});
  }
  doc["pulse_order"] = nlohmann::ordered_json::array();
  for (int p : seq.pulse_order) doc["pulse_order"].push_back(seq.labels[p]);
  doc["families"] = nlohmann::ordered_json::array();
  for (NoiseFamily f : seq.families) doc["families"].push_back(to_string(f));
  return doc.dump(2) + "\n";
}

DDSequence parse_sequence(const std::string& text) {
  DDSequence seq;
  std::size_t declared_order = 0;
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    require(doc.value("schema", std::string()) == "acspin.ddseq/1", ErrorCode::parse,
            "sequence: missing or unknown schema");
    seq.name = doc.at("name").get<std::string>();
    declared_order = doc.at("group_order").get<std::size_t>();
    std::map<std::string, int> index;
    for (const auto& g : doc.at("generators")) {
      const auto& ax = g.at("axis");
      const Vec3 v(ax.at(0).get<double>(), ax.at(1).get<double>(), ax.at(2).get<double>());
      require(std::abs(v.norm() - 1.0) < 1e-9, ErrorCode::parse, "sequence: generator axis is not a unit vector");
      const std::string label = g.at("label").get<std::string>();
      require(!index.contains(label), ErrorCode::parse, "sequence: duplicate generator label " + label);
      index[label] = static_cast<int>(seq.generators.size());
      seq.labels.push_back(label);
      seq.generators.push_back({v, g.at("angle").get<double>()});
    }
    require(!seq.generators.empty(), ErrorCode::parse, "sequence: no generators");
    for (const auto& p : doc.at("pulse_order")) {
      const auto it = index.find(p.get<std::string>());
      require(it != index.end(), ErrorCode::parse, "sequence: pulse label without generator");
      seq.pulse_order.push_back(it->second);
    }
    for (const auto& f : doc.at("families")) seq.families.push_back(family_from_string(f.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("sequence: ") + e.what());
  }

  std::vector<Mat3> mats;
  for (const auto& a : seq.generators) mats.push_back(rotation_matrix(a.axis, a.angle));
  seq.group = generate_group(mats);
  require(seq.group.size() == declared_order, ErrorCode::parse,
          "sequence: generators give a group of order " + std::to_string(seq.group.size()) + ", file declares " +
              std::to_string(declared_order));
  const SequenceCheck check = validate_sequence(seq);
  require(check.ok, ErrorCode::parse, "sequence " + seq.name + ": " + check.message);

  std::ostringstream hex;
  hex << std::hex << fnv1a64(text);
  seq.source_hash = hex.str();
  return seq;
}

DDSequence load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open sequence file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

std::vector<DDSequence> search_sequences(const std::string& name, std::size_t group_order, AxisSet axes,
                                         const std::vector<NoiseFamily>& families, std::size_t max_results) {
  // One representative per axis line; the sign is absorbed by the angle.
  std::vector<Vec3> cand;
  for (int a = 0; a < 3; ++a) cand.push_back(Vec3::Unit(a));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int s : {1, -1}) cand.push_back((Vec3::Unit(a) + s * Vec3::Unit(b)).normalized());
  for (int sy : {1, -1})
    for (int sz : {1, -1}) cand.push_back(Vec3(1.0, sy, sz).normalized());
  if (axes == AxisSet::tilted_cube) {
    const Mat3 r = Eigen::Quaterniond::FromTwoVectors(Vec3(1, 1, 1).normalized(), Vec3::UnitZ()).toRotationMatrix();
    for (Vec3& v : cand) v = r * v;
  }
  constexpr double pi = std::numbers::pi;
  const std::array<double, 3> angles{2.0 * pi / 3.0, pi, pi / 2.0};

  std::vector<DDSequence> out;
  for (double a1 : angles)
    for (double a2 : angles) {
      for (std::size_t p = 0; p < cand.size(); ++p)
        for (std::size_t q = p + 1; q < cand.size(); ++q) {
          const Mat3 g1 = rotation_matrix(cand[p], a1);
          const Mat3 g2 = rotation_matrix(cand[q], a2);
          std::vector<Mat3> group;
          try {
            group = generate_group(std::array<Mat3, 2>{g1, g2}, group_order);
          } catch (const Error&) {
            continue;  // larger than requested
          }
          if (group.size() != group_order) continue;
          DDSequence seq = make_sequence(name, {{cand[p], a1}, {cand[q], a2}}, families);
          if (!validate_sequence(seq).ok) continue;
          out.push_back(std::move(seq));
          if (out.size() >= max_results) return out;
        }
    }
  return out;
}

}  // namespace acspin
