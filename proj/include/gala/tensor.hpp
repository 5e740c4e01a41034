#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gala::ad {

using Shape = std::vector<std::int64_t>;

inline std::int64_t numel_of(const Shape& s) {
  std::int64_t n = 1;
  for (auto d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

enum class DType { f64, f32 };

class Graph;
class GradSink;

// Handle to a node in a Graph.  Cheap to copy; the graph owns all storage.
class Tensor {
 public:
  Tensor() = default;
  Tensor(Graph* g, int id) : graph_(g), id_(id) {}

  bool defined() const { return graph_ != nullptr; }
  Graph* graph() const { return graph_; }
  int id() const { return id_; }

  const Shape& shape() const;
  int rank() const { return static_cast<int>(shape().size()); }
  std::int64_t dim(int i) const;
  std::int64_t numel() const { return numel_of(shape()); }
  bool requires_grad() const;

  std::span<const double> data() const;
  double item() const;

 private:
  Graph* graph_ = nullptr;
  int id_ = -1;
};

// Integer payloads (type indices, labels) that never take gradients.
struct IntArray {
  Shape shape;
  std::vector<std::int64_t> data;

  std::int64_t numel() const { return numel_of(shape); }
};

using Vjp = std::function<void(Graph&, const Tensor& self, const Tensor& grad,
                               GradSink&)>;

struct Node {
  Shape shape;
  std::vector<double> value;
  std::vector<int> inputs;
  bool requires_grad = false;
  const char* op = "leaf";
  Vjp vjp;  // empty for leaves and gradient-free nodes
};

// Result of a backward pass: node id -> gradient node id (-1 if none).
class GradMap {
 public:
  GradMap() = default;
  GradMap(Graph* g, std::vector<int> grads) : graph_(g), grads_(std::move(grads)) {}

  Tensor grad(const Tensor& t) const {
    if (!t.defined() || t.graph() != graph_) return {};
    if (t.id() < 0 || t.id() >= static_cast<int>(grads_.size())) return {};
    const int gid = grads_[static_cast<std::size_t>(t.id())];
    return gid < 0 ? Tensor{} : Tensor(graph_, gid);
  }

 private:
  Graph* graph_ = nullptr;
  std::vector<int> grads_;
};

// Append-only tape of executed operations.  Values are computed eagerly on
// node creation; backward walks the tape in exact reverse execution order.
class Graph {
 public:
  explicit Graph(DType dtype = DType::f64, bool check_finite = true)
      : dtype_(dtype), check_finite_(check_finite) {}

  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  DType dtype() const { return dtype_; }
  std::size_t size() const { return nodes_.size(); }
  bool consumed() const { return consumed_; }

  Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  Tensor leaf(Shape shape, std::span<const double> data, bool requires_grad,
              const char* op = "leaf") {
    if (static_cast<std::int64_t>(data.size()) != numel_of(shape))
      throw std::invalid_argument(std::string(op) + ": data length does not match shape");
    return emplace(std::move(shape), std::vector<double>(data.begin(), data.end()),
                   {}, op, {}, requires_grad);
  }

  Tensor constant(Shape shape, std::vector<double> data, const char* op = "const") {
    if (static_cast<std::int64_t>(data.size()) != numel_of(shape))
      throw std::invalid_argument(std::string(op) + ": data length does not match shape");
    return emplace(std::move(shape), std::move(data), {}, op, {}, false);
  }

  Tensor scalar(double v) { return constant(Shape{}, {v}, "scalar"); }

  Tensor zeros(Shape shape) {
    auto n = numel_of(shape);
    return constant(std::move(shape), std::vector<double>(static_cast<std::size_t>(n), 0.0), "zeros");
  }

  Tensor full(Shape shape, double v) {
    auto n = numel_of(shape);
    return constant(std::move(shape), std::vector<double>(static_cast<std::size_t>(n), v), "full");
  }

  // Core node factory used by every op.
  Tensor emplace(Shape shape, std::vector<double> value, std::vector<int> inputs,
                 const char* op, Vjp vjp, bool force_requires_grad = false) {
    if (consumed_)
      throw std::logic_error("graph already consumed by backward; create a new graph");
    Node nd;
    nd.shape = std::move(shape);
    nd.value = std::move(value);
    nd.inputs = std::move(inputs);
    nd.op = op;
    nd.requires_grad = force_requires_grad;
    for (int in : nd.inputs)
      if (node(in).requires_grad) nd.requires_grad = true;
    if (nd.requires_grad) nd.vjp = std::move(vjp);
    if (dtype_ == DType::f32)
      for (auto& x : nd.value) x = static_cast<double>(static_cast<float>(x));
    if (check_finite_) {
      for (double x : nd.value)
        if (!std::isfinite(x))
          throw std::runtime_error(std::string("non-finite value produced by op '") + op + "'");
    }
    nodes_.push_back(std::move(nd));
    return Tensor(this, static_cast<int>(nodes_.size()) - 1);
  }

  // Reverse-mode sweep from a scalar output.  With create_graph the gradient
  // computation itself is recorded, so gradients can be differentiated again;
  // otherwise the tape is consumed and refuses further work.
  GradMap backward(const Tensor& out, bool create_graph = false);

 private:
  std::deque<Node> nodes_;  // append-only; references stay valid
  DType dtype_;
  bool check_finite_;
  bool consumed_ = false;
};

inline const Shape& Tensor::shape() const { return graph_->node(id_).shape; }

inline std::int64_t Tensor::dim(int i) const {
  const auto& s = shape();
  if (i < 0) i += static_cast<int>(s.size());
  return s[static_cast<std::size_t>(i)];
}

inline bool Tensor::requires_grad() const { return graph_->node(id_).requires_grad; }

inline std::span<const double> Tensor::data() const {
  const auto& v = graph_->node(id_).value;
  return {v.data(), v.size()};
}

inline double Tensor::item() const {
  if (numel() != 1) throw std::logic_error("item() requires a single-element tensor");
  return data()[0];
}

// Accumulates gradient contributions per node during one backward pass.
class GradSink {
 public:
  GradSink(Graph& g, std::size_t n) : graph_(g), grads_(n, -1) {}

  void add(const Tensor& target, const Tensor& contribution);

  int grad_id(int node) const { return grads_[static_cast<std::size_t>(node)]; }
  void seed(int node, const Tensor& t) { grads_[static_cast<std::size_t>(node)] = t.id(); }
  std::vector<int> take() { return std::move(grads_); }

 private:
  Graph& graph_;
  std::vector<int> grads_;
};

}  // namespace gala::ad
