#include "evaluate.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace dpgc {

namespace {

// standard vec index (c*d + r) -> slot-pair index (digits (2c_i + r_i), slot 1
// most significant)
std::vector<std::int64_t> slotpair_of_std(int qubits) {
  std::int64_t d = pow2(qubits);
  std::vector<std::int64_t> map(d * d);
  for (std::int64_t c = 0; c < d; ++c)
    for (std::int64_t r = 0; r < d; ++r) {
      std::int64_t sp = 0;
      for (int i = 0; i < qubits; ++i) {
        std::int64_t ci = (c >> (qubits - 1 - i)) & 1;
        std::int64_t ri = (r >> (qubits - 1 - i)) & 1;
        sp = sp * 4 + (ci * 2 + ri);
      }
      map[c * d + r] = sp;
    }
  return map;
}

struct SlotOp {
  int in_q = 0, out_q = 0;
  bool diagonal = false;
  Vec diag;  // when diagonal
  Mat dense; // 4^out x 4^in, slot-pair ordered on both sides
};

SlotOp to_slot_op(const CPMap& phi) {
  SlotOp op;
  op.in_q = phi.in_qubits;
  op.out_q = phi.out_qubits;
  auto in_map = slotpair_of_std(phi.in_qubits);
  auto out_map = slotpair_of_std(phi.out_qubits);
  Mat sp(phi.sop.rows(), phi.sop.cols());
  for (Eigen::Index i = 0; i < phi.sop.rows(); ++i)
    for (Eigen::Index j = 0; j < phi.sop.cols(); ++j) sp(out_map[i], in_map[j]) = phi.sop(i, j);
  if (phi.in_qubits == phi.out_qubits) {
    bool diag = true;
    for (Eigen::Index i = 0; i < sp.rows() && diag; ++i)
      for (Eigen::Index j = 0; j < sp.cols(); ++j)
        if (i != j && std::abs(sp(i, j)) > 0.0) { diag = false; break; }
    if (diag) {
      op.diagonal = true;
      op.diag = sp.diagonal();
      return op;
    }
  }
  op.dense = std::move(sp);
  return op;
}

struct VertexOps {
  const AdaptiveInstrument* inst = nullptr;
  // slot ops per present (a,b) entry
  std::map<std::pair<std::uint32_t, std::uint32_t>, SlotOp> ops;
};

// identifies a v-wire by its position in the graph's wire list
using WireIdx = int;

struct Engine {
  const Graph& g;
  const LabelSemantics& sem;

  std::map<std::string, AdaptiveInstrument> resolved;  // label key -> instrument
  std::map<std::string, VertexOps> per_vertex;

  std::vector<std::string> order;  // processing order

  explicit Engine(const Graph& graph, const LabelSemantics& semantics) : g(graph), sem(semantics) {
    for (const Vertex& v : g.vertices()) {
      auto key = v.label.key();
      auto it = resolved.find(key);
      if (it == resolved.end()) it = resolved.emplace(key, sem.resolve(v.label)).first;
      VertexOps ops;
      ops.inst = &it->second;
      for (const auto& [ab, cp] : it->second.table) ops.ops.emplace(ab, to_slot_op(cp));
      per_vertex.emplace(v.id, std::move(ops));
    }
    order = schedule();
  }

  // Kahn's algorithm preferring vertices that shrink the frontier
  std::vector<std::string> schedule() const {
    std::map<std::string, int> indeg;
    std::map<std::string, std::vector<std::string>> succ;
    for (const Vertex& v : g.vertices()) indeg[v.id] = 0;
    auto add = [&](const std::vector<Wire>& wires) {
      for (const Wire& w : wires)
        if (!w.from.boundary && !w.to.boundary) {
          succ[w.from.vertex].push_back(w.to.vertex);
          ++indeg[w.to.vertex];
        }
    };
    add(g.h_wires());
    add(g.v_wires());
    auto priority = [&](const std::string& id) {
      const Label& lb = g.vertex(id).label;
      return lb.h_out - lb.h_in;  // measurements first, preparations last
    };
    using Entry = std::pair<int, std::string>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (const auto& [id, d] : indeg)
      if (d == 0) ready.push({priority(id), id});
    std::vector<std::string> out;
    while (!ready.empty()) {
      auto [p, id] = ready.top();
      ready.pop();
      out.push_back(id);
      for (const std::string& s : succ[id])
        if (--indeg[s] == 0) ready.push({priority(s), s});
    }
    if (out.size() != g.vertices().size()) throw validation_error("cycle in total flow graph");
    return out;
  }
};

// live classical wire values, keyed by bitmask over v-wire indices
using StateMap = std::map<std::uint64_t, Mat>;

}  // namespace

AdaptiveInstrument evaluate(const Graph& g, const LabelSemantics& sem) {
  Engine eng(g, sem);

  const int m = g.m(), n = g.n(), k = g.k(), l = g.l();
  const std::int64_t cols = pow2(2 * m);

  // v-wire bookkeeping
  const auto& vws = g.v_wires();
  auto vwire_to = [&](const Endpoint& tgt) -> int {
    for (std::size_t i = 0; i < vws.size(); ++i)
      if (vws[i].to == tgt) return int(i);
    throw internal_error("missing v-wire");
  };
  auto vwire_from = [&](const Endpoint& src) -> int {
    for (std::size_t i = 0; i < vws.size(); ++i)
      if (vws[i].from == src) return int(i);
    throw internal_error("missing v-wire");
  };

  // h-wire ids are indices into g.h_wires(); the frontier holds them
  const auto& hws = g.h_wires();
  auto hwire_from = [&](const Endpoint& src) -> int {
    for (std::size_t i = 0; i < hws.size(); ++i)
      if (hws[i].from == src) return int(i);
    throw internal_error("missing h-wire");
  };

  // classical-state bits are allocated per live wire, so only the maximal
  // number of simultaneously live classical wires is bounded (by 64)
  std::vector<int> slot_of(vws.size(), -1);
  {
    std::vector<int> free_slots;
    int next_slot = 0;
    auto alloc = [&](int w) {
      int s;
      if (!free_slots.empty()) {
        s = free_slots.back();
        free_slots.pop_back();
      } else {
        if (next_slot >= 64) throw validation_error("too many live classical wires to evaluate");
        s = next_slot++;
      }
      slot_of[std::size_t(w)] = s;
    };
    for (int i = 1; i <= k; ++i) alloc(vwire_from(Endpoint::at_boundary(i)));
    for (const std::string& vid : eng.order) {
      const Label& lb = g.vertex(vid).label;
      for (int p = 1; p <= lb.v_in; ++p)
        free_slots.push_back(slot_of[std::size_t(vwire_to(Endpoint::at_vertex(vid, p)))]);
      for (int p = 1; p <= lb.v_out; ++p) alloc(vwire_from(Endpoint::at_vertex(vid, p)));
    }
  }

  auto boundary_out_bits = [&](std::uint64_t state) {
    std::uint32_t b = 0;
    for (int j = 1; j <= l; ++j) {
      int s = slot_of[std::size_t(vwire_to(Endpoint::at_boundary(j)))];
      b = (b << 1) | ((state >> s) & 1);
    }
    return b;
  };

  AdaptiveInstrument out;
  out.k = k;
  out.l = l;
  out.m = m;
  out.n = n;

  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    // initial classical state: boundary v-inputs carry the bits of a
    std::uint64_t init = 0;
    for (int i = 1; i <= k; ++i)
      if ((a >> (k - i)) & 1)
        init |= (std::uint64_t(1) << slot_of[std::size_t(vwire_from(Endpoint::at_boundary(i)))]);

    // initial frontier: boundary h-inputs in order; running map starts as the
    // identity with slot-pair rows and standard-vec columns
    std::vector<int> frontier;
    for (int i = 1; i <= m; ++i) frontier.push_back(hwire_from(Endpoint::at_boundary(i)));
    Mat ident = Mat::Zero(cols, cols);
    auto sp_in = slotpair_of_std(m);
    for (std::int64_t j = 0; j < cols; ++j) ident(sp_in[j], j) = 1.0;

    StateMap states;
    states.emplace(init, std::move(ident));

    for (const std::string& vid : eng.order) {
      const Vertex& v = g.vertex(vid);
      const VertexOps& vo = eng.per_vertex.at(vid);
      const int s_in = v.label.h_in, s_out = v.label.h_out;

      // rotate the consumed wires to the least significant slots, port order
      std::vector<int> in_wires, out_wires;
      for (int p = 1; p <= s_in; ++p) {
        const Wire& w = g.h_wire_to(Endpoint::at_vertex(vid, p));
        int idx = 0;
        for (std::size_t i = 0; i < hws.size(); ++i)
          if (hws[i].from == w.from && hws[i].to == w.to) { idx = int(i); break; }
        in_wires.push_back(idx);
      }
      for (int p = 1; p <= s_out; ++p) out_wires.push_back(hwire_from(Endpoint::at_vertex(vid, p)));

      std::vector<int> keep;
      for (int w : frontier)
        if (std::find(in_wires.begin(), in_wires.end(), w) == in_wires.end()) keep.push_back(w);
      std::vector<int> target = keep;
      target.insert(target.end(), in_wires.begin(), in_wires.end());

      // row gather for the slot permutation frontier -> target
      const int f = int(frontier.size());
      std::vector<std::int64_t> gather;
      bool is_identity_perm = (target == frontier);
      if (!is_identity_perm) {
        std::vector<int> pos_of(f);
        for (int t = 0; t < f; ++t) {
          auto it = std::find(frontier.begin(), frontier.end(), target[t]);
          pos_of[t] = int(it - frontier.begin());
        }
        std::int64_t rows = pow2(2 * f);
        gather.resize(rows);
        for (std::int64_t r = 0; r < rows; ++r) {
          std::int64_t out_idx = 0;
          for (int t = 0; t < f; ++t) {
            std::int64_t digit = (r >> (2 * (f - 1 - pos_of[t]))) & 3;
            out_idx |= digit << (2 * (f - 1 - t));
          }
          gather[out_idx] = r;
        }
      }

      // classical io of this vertex, in state-bit slots
      std::vector<int> vin_wires, vout_wires;
      for (int p = 1; p <= v.label.v_in; ++p)
        vin_wires.push_back(slot_of[std::size_t(vwire_to(Endpoint::at_vertex(vid, p)))]);
      for (int p = 1; p <= v.label.v_out; ++p)
        vout_wires.push_back(slot_of[std::size_t(vwire_from(Endpoint::at_vertex(vid, p)))]);

      const std::int64_t rest = pow2(2 * (f - s_in));
      StateMap next;
      for (auto& [cstate, mat] : states) {
        Mat permuted;
        const Mat* src = &mat;
        if (!is_identity_perm) {
          permuted.resize(mat.rows(), mat.cols());
          for (Eigen::Index c = 0; c < mat.cols(); ++c)
            for (Eigen::Index r = 0; r < mat.rows(); ++r) permuted(r, c) = mat(gather[r], c);
          src = &permuted;
        }

        std::uint32_t a_v = 0;
        for (int w : vin_wires) a_v = (a_v << 1) | ((cstate >> w) & 1);

        std::uint64_t base = cstate;
        for (int w : vin_wires) base &= ~(std::uint64_t(1) << w);  // consumed

        for (const auto& [ab, op] : vo.ops) {
          if (ab.first != a_v) continue;
          // reinterpret (4^f x cols) as (4^s_in x 4^(f-s_in)*cols) and act on the left
          Eigen::Map<const Mat> x(src->data(), pow2(2 * s_in), rest * cols);
          Mat y;
          if (op.diagonal)
            y = op.diag.asDiagonal() * x;
          else
            y = op.dense * x;
          Mat result = Eigen::Map<Mat>(y.data(), pow2(2 * (f - s_in + s_out)), cols);

          std::uint64_t cnew = base;
          for (int p = 0; p < v.label.v_out; ++p)
            if ((ab.second >> (v.label.v_out - 1 - p)) & 1)
              cnew |= (std::uint64_t(1) << vout_wires[p]);

          auto it = next.find(cnew);
          if (it == next.end())
            next.emplace(cnew, std::move(result));
          else
            it->second += result;
        }
      }
      states = std::move(next);
      frontier = keep;
      frontier.insert(frontier.end(), out_wires.begin(), out_wires.end());
    }

    // reorder the frontier to the boundary output order and convert rows back
    std::vector<int> final_wires;
    for (int j = 1; j <= n; ++j) {
      const Wire& w = g.h_wire_to(Endpoint::at_boundary(j));
      for (std::size_t i = 0; i < hws.size(); ++i)
        if (hws[i].from == w.from && hws[i].to == w.to) { final_wires.push_back(int(i)); break; }
    }
    std::vector<int> pos_of(n);
    for (int t = 0; t < n; ++t) {
      auto it = std::find(frontier.begin(), frontier.end(), final_wires[t]);
      if (it == frontier.end()) throw internal_error("frontier does not match boundary outputs");
      pos_of[t] = int(it - frontier.begin());
    }

    for (auto& [cstate, mat] : states) {
      std::uint32_t b = boundary_out_bits(cstate);
      Mat sop(pow2(2 * n), cols);
      for (std::int64_t c = 0; c < pow2(n); ++c)
        for (std::int64_t r = 0; r < pow2(n); ++r) {
          std::int64_t sp = 0;  // slot-pair index in the *frontier* digit order
          for (int t = 0; t < n; ++t) {
            std::int64_t ci = (c >> (n - 1 - t)) & 1;
            std::int64_t ri = (r >> (n - 1 - t)) & 1;
            sp |= (ci * 2 + ri) << (2 * (n - 1 - pos_of[t]));
          }
          sop.row(c * pow2(n) + r) = mat.row(sp);
        }
      CPMap cp{m, n, std::move(sop)};
      auto key = std::make_pair(a, b);
      auto it = out.table.find(key);
      if (it == out.table.end())
        out.table.emplace(key, std::move(cp));
      else
        it->second.sop += cp.sop;
    }
  }
  return out;
}

}  // namespace dpgc
