#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace svlab {

using Scalar = double;
// Row-major dense storage: a "vector" is a 1xN row, a token batch is TxN.
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class Tape;

// Lightweight handle to a node on a tape. Copyable; valid until the owning
// tape is cleared or destroyed.
class Var {
 public:
  Var() = default;

  const Matrix& value() const;
  const Matrix& grad() const;
  bool requires_grad() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  Scalar item() const;  // value of a 1x1 node

  bool valid() const { return tape_ != nullptr; }
  Tape* tape() const { return tape_; }
  int id() const { return id_; }

 private:
  friend class Tape;
  friend struct TapeOps;
  Var(Tape* tape, int id) : tape_(tape), id_(id) {}
  Tape* tape_ = nullptr;
  int id_ = -1;
};

// Tape-based reverse-mode graph. One tape per training step; clear() resets.
// All nodes hold 64-bit dense matrices. Single-threaded by construction;
// independent tapes may be used concurrently.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var leaf(Matrix value, bool requires_grad);
  Var constant(Matrix value) { return leaf(std::move(value), false); }
  Var scalar(Scalar v, bool requires_grad = false);

  // Accumulates d(loss)/d(node) into every requires_grad ancestor of `loss`.
  // `loss` must be 1x1. Grad buffers are freshly zeroed per call.
  void backward(Var loss);

  void clear();
  std::size_t size() const { return nodes_.size(); }

 private:
  friend class Var;
  friend struct TapeOps;

  struct Node {
    Matrix value;
    Matrix grad;  // empty until touched by backward
    bool requires_grad = false;
    std::function<void(Tape&)> backprop;  // null for leaves
  };

  Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  Matrix& grad_buf(int id);  // allocates zeros on first touch

  std::vector<Node> nodes_;
};

// ---------------------------------------------------------------------------
// Primitive operations. Free functions so composites read like math.
// Shape mismatches throw std::invalid_argument naming both shapes.
// ---------------------------------------------------------------------------

Var matmul(Var a, Var b);     // (r,k)x(k,c)
Var matmul_nt(Var a, Var b);  // a * b^T : (r,k)x(c,k)

// add/sub/mul accept b of equal shape, a 1x1 scalar, or a 1xC row broadcast
// over the rows of a. mul additionally accepts a 1x1 `a`.
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var div_scalar(Var a, Var s);  // s is 1x1
Var scale(Var a, Scalar c);

Var row_softmax(Var a);
Var causal_row_softmax(Var a);  // row i attends to columns 0..i
Var rms_norm_rows(Var a, Var gain);  // gain is 1xC

Var gelu(Var a);
Var relu(Var a);
Var sigmoid(Var a);
Var log_elem(Var a);
Var sqrt_elem(Var a);
// Numerically stable log(1 + exp(a)), elementwise.
Var softplus(Var a);

Var sum(Var a);     // 1x1
Var sum_sq(Var a);  // 1x1

Var embedding(Var table, const std::vector<int>& ids);
Var slice_cols(Var a, int first, int count);
Var concat_cols(const std::vector<Var>& parts);
Var select_rows(Var a, const std::vector<int>& rows);
// Copy of `a` with the given rows replaced by the rows of `r` (in order).
// Gradient for the replaced rows flows to `r` only.
Var replace_rows(Var a, const std::vector<int>& rows, Var r);

// Sum over k of -log softmax(logits.row(positions[k]))[targets[k]].
Var cross_entropy_sum(Var logits, const std::vector<int>& positions,
                      const std::vector<int>& targets);

}  // namespace svlab
