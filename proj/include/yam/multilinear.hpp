#pragma once

#include "yam/exact_field.hpp"

#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yam {

// Calls fn(tuple) for every index tuple with tuple[s] < dims[s], last slot
// fastest (lexicographic order).
inline void for_each_tuple(std::span<const Index> dims, const std::function<void(std::span<const Index>)>& fn) {
  for (Index d : dims)
    if (d == 0) return;
  std::vector<Index> t(dims.size(), 0);
  while (true) {
    fn(t);
    std::size_t s = dims.size();
    while (s > 0) {
      --s;
      if (++t[s] < dims[s]) break;
      t[s] = 0;
      if (s == 0) return;
    }
    if (dims.empty()) return;
  }
}

// A k-linear map V1 x ... x Vk -> W by structure constants. The tensor is
// flat with the output coordinate innermost.
template <typename Scalar>
class MultilinearOp {
 public:
  MultilinearOp() = default;

  MultilinearOp(std::vector<Index> input_dims, Index output_dim)
      : input_dims_(std::move(input_dims)), output_dim_(output_dim) {
    tensor_ = VectorX<Scalar>::Zero(input_count() * output_dim_);
  }

  // An arity-k operation on a single space of dimension n.
  static MultilinearOp on_space(int arity, Index n) {
    return MultilinearOp(std::vector<Index>(static_cast<std::size_t>(arity), n), n);
  }

  int arity() const { return static_cast<int>(input_dims_.size()); }
  const std::vector<Index>& input_dims() const { return input_dims_; }
  Index input_dim(int slot) const { return input_dims_.at(static_cast<std::size_t>(slot)); }
  Index output_dim() const { return output_dim_; }
  Index size() const { return tensor_.size(); }

  Index input_count() const {
    return std::accumulate(input_dims_.begin(), input_dims_.end(), Index{1}, std::multiplies<Index>());
  }

  const VectorX<Scalar>& tensor() const { return tensor_; }
  VectorX<Scalar>& tensor() { return tensor_; }

  Index tuple_index(std::span<const Index> inputs) const {
    if (inputs.size() != input_dims_.size()) throw std::invalid_argument("tuple arity mismatch");
    Index t = 0;
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      if (inputs[s] < 0 || inputs[s] >= input_dims_[s]) throw std::out_of_range("basis index out of range");
      t = t * input_dims_[s] + inputs[s];
    }
    return t;
  }

  Index flat_index(std::span<const Index> inputs, Index out) const {
    if (out < 0 || out >= output_dim_) throw std::out_of_range("output index out of range");
    return tuple_index(inputs) * output_dim_ + out;
  }

  const Scalar& at(std::span<const Index> inputs, Index out) const { return tensor_(flat_index(inputs, out)); }
  Scalar& at(std::span<const Index> inputs, Index out) { return tensor_(flat_index(inputs, out)); }

  // op({i1, ..., ik, j}): the j-th output coordinate on (e_i1, ..., e_ik).
  Scalar& operator()(std::initializer_list<Index> idx) {
    std::vector<Index> v(idx);
    const Index out = v.back();
    v.pop_back();
    return at(v, out);
  }
  const Scalar& operator()(std::initializer_list<Index> idx) const {
    std::vector<Index> v(idx);
    const Index out = v.back();
    v.pop_back();
    return at(v, out);
  }

  auto output_at(std::span<const Index> inputs) const {
    return tensor_.segment(tuple_index(inputs) * output_dim_, output_dim_);
  }
  auto output_at(std::span<const Index> inputs) {
    return tensor_.segment(tuple_index(inputs) * output_dim_, output_dim_);
  }

  bool same_shape(const MultilinearOp& o) const {
    return input_dims_ == o.input_dims_ && output_dim_ == o.output_dim_;
  }

  bool is_zero() const { return is_zero_matrix(tensor_); }

  friend bool operator==(const MultilinearOp& a, const MultilinearOp& b) {
    return a.same_shape(b) && a.tensor_ == b.tensor_;
  }

  MultilinearOp& operator+=(const MultilinearOp& o) {
    require_shape(o);
    tensor_ += o.tensor_;
    return *this;
  }
  MultilinearOp& operator-=(const MultilinearOp& o) {
    require_shape(o);
    tensor_ -= o.tensor_;
    return *this;
  }
  MultilinearOp& operator*=(const Scalar& c) {
    tensor_ *= c;
    return *this;
  }
  friend MultilinearOp operator+(MultilinearOp a, const MultilinearOp& b) { return a += b; }
  friend MultilinearOp operator-(MultilinearOp a, const MultilinearOp& b) { return a -= b; }
  friend MultilinearOp operator-(MultilinearOp a) { return a *= Scalar(-1); }
  friend MultilinearOp operator*(const Scalar& c, MultilinearOp a) { return a *= c; }

 private:
  void require_shape(const MultilinearOp& o) const {
    if (!same_shape(o)) throw std::invalid_argument("multilinear op shape mismatch");
  }

  std::vector<Index> input_dims_;
  Index output_dim_ = 0;
  VectorX<Scalar> tensor_;
};

using Op = MultilinearOp<Rational>;

template <typename Scalar>
VectorX<Scalar> evaluate(const MultilinearOp<Scalar>& op, std::span<const VectorX<Scalar>> args) {
  if (static_cast<int>(args.size()) != op.arity()) throw std::invalid_argument("evaluate: wrong number of arguments");
  std::vector<std::vector<std::pair<Index, Scalar>>> nz(args.size());
  for (std::size_t s = 0; s < args.size(); ++s) {
    if (args[s].size() != op.input_dims()[s]) throw std::invalid_argument("evaluate: argument dimension mismatch");
    for (Index i = 0; i < args[s].size(); ++i)
      if (!is_zero(args[s](i))) nz[s].emplace_back(i, args[s](i));
  }
  VectorX<Scalar> out = VectorX<Scalar>::Zero(op.output_dim());
  for (const auto& list : nz)
    if (list.empty()) return out;
  const std::size_t k = args.size();
  std::vector<std::size_t> pos(k, 0);
  const Index od = op.output_dim();
  while (true) {
    Scalar c(1);
    Index t = 0;
    for (std::size_t s = 0; s < k; ++s) {
      c *= nz[s][pos[s]].second;
      t = t * op.input_dims()[s] + nz[s][pos[s]].first;
    }
    const auto& ten = op.tensor();
    for (Index j = 0; j < od; ++j) {
      const Scalar& e = ten(t * od + j);
      if (!is_zero(e)) out(j) += c * e;
    }
    std::size_t s = k;
    while (s > 0) {
      --s;
      if (++pos[s] < nz[s].size()) break;
      pos[s] = 0;
      if (s == 0) return out;
    }
    if (k == 0) return out;
  }
}

template <typename Scalar>
VectorX<Scalar> evaluate(const MultilinearOp<Scalar>& op, std::initializer_list<VectorX<Scalar>> args) {
  std::vector<VectorX<Scalar>> v(args);
  return evaluate(op, std::span<const VectorX<Scalar>>(v));
}

template <typename Scalar>
VectorX<Scalar> unit_vector(Index dim, Index i) {
  VectorX<Scalar> v = VectorX<Scalar>::Zero(dim);
  v(i) = Scalar(1);
  return v;
}

// op'(x1, ..., xk) = op(M1 x1, ..., Mk xk).
template <typename Scalar>
MultilinearOp<Scalar> pullback(const MultilinearOp<Scalar>& op, const std::vector<MatrixX<Scalar>>& maps) {
  if (static_cast<int>(maps.size()) != op.arity()) throw std::invalid_argument("pullback: one map per slot");
  std::vector<Index> dims;
  for (std::size_t s = 0; s < maps.size(); ++s) {
    if (maps[s].rows() != op.input_dims()[s]) throw std::invalid_argument("pullback: map codomain mismatch");
    dims.push_back(maps[s].cols());
  }
  MultilinearOp<Scalar> out(dims, op.output_dim());
  std::vector<VectorX<Scalar>> args(maps.size());
  for_each_tuple(dims, [&](std::span<const Index> t) {
    for (std::size_t s = 0; s < t.size(); ++s) args[s] = maps[s].col(t[s]);
    out.output_at(t) = evaluate(op, std::span<const VectorX<Scalar>>(args));
  });
  return out;
}

// op' = L o op.
template <typename Scalar>
MultilinearOp<Scalar> pushforward(const MatrixX<Scalar>& map, const MultilinearOp<Scalar>& op) {
  if (map.cols() != op.output_dim()) throw std::invalid_argument("pushforward: map domain mismatch");
  MultilinearOp<Scalar> out(op.input_dims(), map.rows());
  for_each_tuple(op.input_dims(), [&](std::span<const Index> t) {
    out.output_at(t) = map * op.output_at(t);
  });
  return out;
}

// op'(x_0, ..., x_{k-1}) = op(x_{perm[0]}, ..., x_{perm[k-1]}).
template <typename Scalar>
MultilinearOp<Scalar> permute_slots(const MultilinearOp<Scalar>& op, const std::vector<int>& perm) {
  const std::size_t k = static_cast<std::size_t>(op.arity());
  if (perm.size() != k) throw std::invalid_argument("permute_slots: permutation size");
  std::vector<Index> dims(k);
  for (std::size_t t = 0; t < k; ++t) dims[static_cast<std::size_t>(perm[t])] = op.input_dims()[t];
  MultilinearOp<Scalar> out(dims, op.output_dim());
  std::vector<Index> src(k);
  for_each_tuple(dims, [&](std::span<const Index> j) {
    for (std::size_t t = 0; t < k; ++t) src[t] = j[static_cast<std::size_t>(perm[t])];
    out.output_at(j) = op.output_at(src);
  });
  return out;
}

// outer(x_1, ..., inner(y_1, ..., y_l), ..., x_k) with inner placed at slot.
template <typename Scalar>
MultilinearOp<Scalar> substitute(const MultilinearOp<Scalar>& outer, int slot, const MultilinearOp<Scalar>& inner) {
  if (slot < 0 || slot >= outer.arity()) throw std::out_of_range("substitute: slot out of range");
  if (inner.output_dim() != outer.input_dim(slot)) throw std::invalid_argument("substitute: dimension mismatch");
  std::vector<Index> dims;
  for (int s = 0; s < slot; ++s) dims.push_back(outer.input_dim(s));
  for (Index d : inner.input_dims()) dims.push_back(d);
  for (int s = slot + 1; s < outer.arity(); ++s) dims.push_back(outer.input_dim(s));
  MultilinearOp<Scalar> out(dims, outer.output_dim());
  const std::size_t l = static_cast<std::size_t>(inner.arity());
  std::vector<Index> outer_idx(static_cast<std::size_t>(outer.arity()));
  for_each_tuple(dims, [&](std::span<const Index> t) {
    auto inner_val = inner.output_at(t.subspan(static_cast<std::size_t>(slot), l));
    for (int s = 0; s < slot; ++s) outer_idx[static_cast<std::size_t>(s)] = t[static_cast<std::size_t>(s)];
    for (int s = slot + 1; s < outer.arity(); ++s)
      outer_idx[static_cast<std::size_t>(s)] = t[static_cast<std::size_t>(s) + l - 1];
    auto target = out.output_at(t);
    for (Index q = 0; q < inner_val.size(); ++q) {
      if (is_zero(inner_val(q))) continue;
      outer_idx[static_cast<std::size_t>(slot)] = q;
      target += inner_val(q) * outer.output_at(outer_idx);
    }
  });
  return out;
}

// Adds piece into target on the block whose slot s starts at offsets[s] and
// whose output starts at out_offset.
template <typename Scalar>
void add_block(MultilinearOp<Scalar>& target, const MultilinearOp<Scalar>& piece,
               const std::vector<Index>& offsets, Index out_offset) {
  if (piece.arity() != target.arity() || offsets.size() != static_cast<std::size_t>(piece.arity()))
    throw std::invalid_argument("add_block: arity mismatch");
  std::vector<Index> idx(offsets.size());
  for_each_tuple(piece.input_dims(), [&](std::span<const Index> t) {
    for (std::size_t s = 0; s < t.size(); ++s) idx[s] = t[s] + offsets[s];
    target.output_at(idx).segment(out_offset, piece.output_dim()) += piece.output_at(t);
  });
}

// The block of op with slot s restricted to [offsets[s], offsets[s]+dims[s])
// and output restricted to [out_offset, out_offset+out_dim).
template <typename Scalar>
MultilinearOp<Scalar> extract_block(const MultilinearOp<Scalar>& op, const std::vector<Index>& offsets,
                                    const std::vector<Index>& dims, Index out_offset, Index out_dim) {
  MultilinearOp<Scalar> out(dims, out_dim);
  std::vector<Index> idx(dims.size());
  for_each_tuple(dims, [&](std::span<const Index> t) {
    for (std::size_t s = 0; s < t.size(); ++s) idx[s] = t[s] + offsets[s];
    out.output_at(t) = op.output_at(idx).segment(out_offset, out_dim);
  });
  return out;
}

}  // namespace yam
