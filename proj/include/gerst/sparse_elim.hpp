#ifndef GERST_SPARSE_ELIM_HPP
#define GERST_SPARSE_ELIM_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "gerst/field.hpp"

namespace gerst {

/// Ring adaptors for the streaming echelonizer. Value must be a canonical
/// field element; all ops are exact.

struct ScalarRing {
    using Value = Scalar;
    FieldSpec field;

    bool is_zero(const Value& v) const { return v.is_zero(); }
    Value zero() const { return Scalar::zero(field); }
    Value neg(const Value& v) const { return -v; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& v) const { return v.inverse(); }
    // a - v*x
    Value submul(const Value& a, const Value& v, const Value& x) const { return a - v * x; }
    Scalar to_scalar(const Value& v) const { return v; }
    Value from_scalar(const Scalar& s) const { return s; }
};

/// Residues mod p with Barrett reduction; p < 2^31 so products fit uint64.
struct PrimeRing {
    using Value = std::uint64_t;
    FieldSpec field;
    std::uint64_t p;
    std::uint64_t magic;  // floor(2^64 / p)

    explicit PrimeRing(const FieldSpec& f)
        : field(f), p(f.p()), magic(~std::uint64_t{0} / f.p()) {}

    std::uint64_t reduce(std::uint64_t t) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(t) * magic) >> 64);
        std::uint64_t r = t - q * p;
        while (r >= p) r -= p;
        return r;
    }

    bool is_zero(Value v) const { return v == 0; }
    Value zero() const { return 0; }
    Value neg(Value v) const { return v == 0 ? 0 : p - v; }
    Value mul(Value a, Value b) const { return reduce(a * b); }
    Value inv(Value v) const {
        // Fermat: v^(p-2)
        Value r = 1, b = v;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Value submul(Value a, Value v, Value x) const {
        Value t = mul(v, x);
        return a >= t ? a - t : a + p - t;
    }
    Scalar to_scalar(Value v) const { return Scalar(field, static_cast<long long>(v)); }
    Value from_scalar(const Scalar& s) const { return s.residue(); }
};

/// Streaming row echelonizer: rows arrive one at a time as sparse
/// (column, value) lists; pivots are restricted to the first num_vars
/// columns (any further columns are carried as augmented right-hand sides).
/// The accumulated reduced form is the unique RREF of the row space, so
/// every derived output (rank, kernel, canonical solutions) is
/// deterministic regardless of insertion order.
template <class Ring>
class Echelonizer {
  public:
    using Value = typename Ring::Value;
    struct Entry {
        std::uint32_t col;
        Value val;
    };
    using Row = std::vector<Entry>;

    Echelonizer(Ring ring, std::uint32_t width, std::uint32_t num_vars)
        : ring_(ring),
          width_(width),
          num_vars_(num_vars),
          pivot_row_of_col_(num_vars, -1),
          ws_(width, ring.zero()),
          ws_nonzero_(width, false) {}

    /// Entries must have distinct columns < width (any order, zeros allowed).
    void add_row(const Row& row) {
        // scatter into the workspace
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        std::vector<std::uint32_t> touched;
        for (const Entry& e : row) {
            if (ring_.is_zero(e.val)) continue;
            ws_[e.col] = e.val;
            ws_nonzero_[e.col] = true;
            touched.push_back(e.col);
            heap.push(e.col);
        }
        Row reduced;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top() == c) heap.pop();
            if (!ws_nonzero_[c] || ring_.is_zero(ws_[c])) continue;
            int pr = c < num_vars_ ? pivot_row_of_col_[c] : -1;
            if (pr < 0) {
                reduced.push_back({c, ws_[c]});
                ws_nonzero_[c] = false;
                continue;
            }
            Value v = ws_[c];
            ws_nonzero_[c] = false;
            const Row& prow = rows_[static_cast<std::size_t>(pr)];
            for (std::size_t k = 1; k < prow.size(); ++k) {  // entry 0 is the pivot itself
                std::uint32_t cc = prow[k].col;
                if (!ws_nonzero_[cc]) {
                    ws_[cc] = ring_.zero();
                    ws_nonzero_[cc] = true;
                    touched.push_back(cc);
                    heap.push(cc);
                }
                ws_[cc] = ring_.submul(ws_[cc], v, prow[k].val);
            }
        }
        for (std::uint32_t c : touched) ws_nonzero_[c] = false;  // workspace left clean

        if (reduced.empty()) return;
        if (reduced.front().col >= num_vars_) {
            constraints_.push_back(std::move(reduced));
            return;
        }
        // normalize the new pivot row and record it
        Value inv = ring_.inv(reduced.front().val);
        for (Entry& e : reduced) e.val = ring_.mul(e.val, inv);
        pivot_row_of_col_[reduced.front().col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(reduced));
        finalized_ = false;
    }

    std::size_t rank() const { return rows_.size(); }

    /// Back-eliminates so stored rows form the RREF. Idempotent.
    void finalize() {
        if (finalized_) return;
        std::vector<int> order;  // row indices sorted by pivot col
        for (std::uint32_t c = 0; c < num_vars_; ++c)
            if (pivot_row_of_col_[c] >= 0) order.push_back(pivot_row_of_col_[c]);
        for (auto it = order.rbegin(); it != order.rend(); ++it) eliminate_tail(rows_[*it]);
        for (Row& r : constraints_) eliminate_tail(r);
        finalized_ = true;
    }

    std::vector<std::uint32_t> pivot_cols() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < num_vars_; ++c)
            if (pivot_row_of_col_[c] >= 0) out.push_back(c);
        return out;
    }

    /// Canonical kernel basis of the variable block: one sparse vector per
    /// free column, ascending, free coordinate set to 1 (read from the RREF).
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> kernel_basis_sparse() {
        finalize();
        std::vector<int> basis_index_of_col(num_vars_, -1);
        std::vector<std::uint32_t> free_cols;
        for (std::uint32_t f = 0; f < num_vars_; ++f)
            if (pivot_row_of_col_[f] < 0) {
                basis_index_of_col[f] = static_cast<int>(free_cols.size());
                free_cols.push_back(f);
            }
        std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> basis(free_cols.size());
        for (std::size_t b = 0; b < free_cols.size(); ++b)
            basis[b].emplace_back(free_cols[b], Scalar::one(ring_.field));
        for (const Row& r : rows_) {
            std::uint32_t pc = r.front().col;
            for (std::size_t k = 1; k < r.size(); ++k) {
                std::uint32_t c = r[k].col;
                if (c >= num_vars_ || basis_index_of_col[c] < 0) continue;
                basis[static_cast<std::size_t>(basis_index_of_col[c])].emplace_back(
                    pc, ring_.to_scalar(ring_.neg(r[k].val)));
            }
        }
        for (auto& v : basis)
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return basis;
    }

    /// Canonical solution for augmented column num_vars + j, or nullopt if
    /// that right-hand side is inconsistent. Free variables are zero.
    std::optional<Vec> solution(std::uint32_t j) {
        finalize();
        std::uint32_t target = num_vars_ + j;
        for (const Row& r : constraints_)
            for (const Entry& e : r)
                if (e.col == target && !ring_.is_zero(e.val)) return std::nullopt;
        Vec x = zero_vec(ring_.field, num_vars_);
        for (const Row& r : rows_)
            for (std::size_t k = 1; k < r.size(); ++k)
                if (r[k].col == target) x[r.front().col] = ring_.to_scalar(r[k].val);
        return x;
    }

  private:
    // Reduce every non-pivot coordinate of `row` (beyond its leading entry)
    // against the recorded pivot rows, in ascending column order.
    void eliminate_tail(Row& row) {
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        std::vector<std::uint32_t> touched;
        bool is_pivot_row = !row.empty() && row.front().col < num_vars_ &&
                            pivot_row_of_col_[row.front().col] >= 0 &&
                            &rows_[static_cast<std::size_t>(
                                pivot_row_of_col_[row.front().col])] == &row;
        std::uint32_t lead = row.empty() ? width_ : row.front().col;
        for (const Entry& e : row) {
            ws_[e.col] = e.val;
            ws_nonzero_[e.col] = true;
            touched.push_back(e.col);
            heap.push(e.col);
        }
        Row out;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top() == c) heap.pop();
            if (!ws_nonzero_[c] || ring_.is_zero(ws_[c])) continue;
            bool keep = (is_pivot_row && c == lead) || c >= num_vars_ ||
                        pivot_row_of_col_[c] < 0;
            if (keep) {
                out.push_back({c, ws_[c]});
                ws_nonzero_[c] = false;
                continue;
            }
            Value v = ws_[c];
            ws_nonzero_[c] = false;
            const Row& prow = rows_[static_cast<std::size_t>(pivot_row_of_col_[c])];
            for (std::size_t k = 1; k < prow.size(); ++k) {
                std::uint32_t cc = prow[k].col;
                if (!ws_nonzero_[cc]) {
                    ws_[cc] = ring_.zero();
                    ws_nonzero_[cc] = true;
                    touched.push_back(cc);
                    heap.push(cc);
                }
                ws_[cc] = ring_.submul(ws_[cc], v, prow[k].val);
            }
        }
        for (std::uint32_t c : touched) ws_nonzero_[c] = false;
        row = std::move(out);
    }

    Ring ring_;
    std::uint32_t width_, num_vars_;
    std::vector<Row> rows_;         // echelon rows, pivot entry first, pivot value 1
    std::vector<Row> constraints_;  // rows supported only on augmented columns
    std::vector<int> pivot_row_of_col_;
    std::vector<Value> ws_;  // scratch, all-zero between calls
    std::vector<bool> ws_nonzero_;
    bool finalized_ = true;
};

}  // namespace gerst

#endif
