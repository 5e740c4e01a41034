#pragma once

#include <initializer_list>
#include <vector>

#include "gala/rng.hpp"
#include "gala/tensor.hpp"

namespace gala::ad {

// ---- shape plumbing ----

Shape broadcast_shapes(const Shape& a, const Shape& b);
Tensor reshape(const Tensor& x, Shape shape);
Tensor unsqueeze(const Tensor& x, int axis);
Tensor broadcast_to(const Tensor& x, const Shape& target);
Tensor sum_to(const Tensor& x, const Shape& target);  // inverse of broadcast_to
Tensor detach(const Tensor& x);

// ---- elementwise (broadcasting) ----

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor divide(const Tensor& a, const Tensor& b);
Tensor neg(const Tensor& x);
Tensor scale(const Tensor& x, double c);
Tensor add_const(const Tensor& x, double c);
Tensor relu(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor exp_op(const Tensor& x);
Tensor log_op(const Tensor& x);
Tensor sqrt_op(const Tensor& x);

// ---- reductions ----

Tensor sum_axes(const Tensor& x, std::vector<int> axes, bool keepdim);
Tensor sum_all(const Tensor& x);  // scalar
Tensor mean_axes(const Tensor& x, std::vector<int> axes, bool keepdim);

// Euclidean norm over the last axis, keepdim; the gradient at the origin is
// taken as zero (the subgradient consistent with central differences).
Tensor l2norm_last(const Tensor& x);

// ---- structure ----

Tensor slice_last(const Tensor& x, std::int64_t start, std::int64_t len);
Tensor pad_last(const Tensor& x, std::int64_t before, std::int64_t after);
Tensor concat_last(const std::vector<Tensor>& xs);

// ---- linear algebra ----

Tensor transpose2d(const Tensor& x);
// y[..., n] = sum_m x[..., m] W[m, n]
Tensor matmul_last(const Tensor& x, const Tensor& w);
// out[m, n] = sum over all leading indices of x[..., m] * y[..., n]
Tensor contract_leading(const Tensor& x, const Tensor& y);

// ---- gather / scatter ----

Tensor embedding(const Tensor& table, const IntArray& indices);
Tensor scatter_rows(const Tensor& src, const IntArray& indices, std::int64_t num_rows);

// ---- composed neural-net pieces ----

Tensor dense(const Tensor& x, const Tensor& w, const Tensor& b);
Tensor dense_nobias(const Tensor& x, const Tensor& w);
Tensor swish(const Tensor& x);
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias,
                  double eps = 1e-5);

// Softmax over `axes` jointly, restricted to unmasked entries.  `mask` is an
// optional 0/1 tensor of the same shape as logits; masked entries come out
// exactly zero.  A group with no unmasked entry throws unless allow_empty,
// in which case its weights are all zero.
Tensor masked_softmax(const Tensor& logits, const Tensor& mask,
                      std::vector<int> axes, bool allow_empty = false);

Tensor dropout(const Tensor& x, double rate, bool training, Rng& rng);

// Mean over unmasked elements of (pred - target)^2.  `mask` (optional) must
// broadcast against pred over leading axes; trailing axes count as components.
Tensor mse(const Tensor& pred, const Tensor& target, const Tensor& mask = {});

// Mean cross entropy of integer labels under softmax(logits[..., C]);
// optional 0/1 mask over the label positions.
Tensor cross_entropy(const Tensor& logits, const IntArray& labels,
                     const Tensor& mask = {});

// ---- helpers on raw data ----

std::vector<double> one_hot_data(const IntArray& idx, std::int64_t num_classes);
// Per-group max of logits over `axes` (keepdim), masked entries ignored;
// groups with no unmasked entries get 0 and are reported in empty_groups.
std::vector<double> masked_group_max(const Tensor& logits, const Tensor& mask,
                                     const std::vector<int>& axes,
                                     Shape& out_shape, std::vector<char>& empty_groups);

}  // namespace gala::ad
