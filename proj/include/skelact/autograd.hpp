#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skelact/tensor.hpp"

namespace skelact {

// One value in the computation graph. Gradients accumulate (+=) into `grad`,
// which is lazily sized to match `value`. Parameters keep their node alive
// across steps; intermediates die with the tape's closures.
template <typename T>
struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;

    Node() = default;
    explicit Node(Tensor<T> v, bool rg = false) : value(std::move(v)), requires_grad(rg) {}

    void ensure_grad() {
        if (grad.shape != value.shape) {
            grad = Tensor<T>(value.shape);
        }
    }
    void zero_grad() {
        if (!grad.data.empty()) grad.zero();
    }
};

template <typename T>
using Var = std::shared_ptr<Node<T>>;

template <typename T>
Var<T> constant(Tensor<T> v) {
    return std::make_shared<Node<T>>(std::move(v), false);
}

template <typename T>
Var<T> leaf(Tensor<T> v) {
    auto n = std::make_shared<Node<T>>(std::move(v), true);
    n->ensure_grad();
    return n;
}

// Ordered record of executed ops. Ops push one backward closure per
// recorded step; backward() replays them in exact reverse execution order.
// A tape drives exactly one backward pass.
template <typename T>
class Tape {
  public:
    void record(std::function<void()> back) { entries_.push_back(std::move(back)); }

    bool consumed() const { return consumed_; }
    size_t size() const { return entries_.size(); }

    void backward(const Var<T>& loss) {
        if (consumed_) {
            throw TapeError("backward called twice on the same tape");
        }
        if (loss->value.numel() != 1) {
            throw ShapeError("backward expects a scalar loss, got " + loss->value.shape_str());
        }
        loss->ensure_grad();
        loss->grad.data[0] += T(1);
        for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
            (*it)();
        }
        consumed_ = true;
    }

  private:
    std::vector<std::function<void()>> entries_;
    bool consumed_ = false;
};

// Named parameter handle: the registry entry checkpoints and the optimizer
// walk. Non-trainable entries carry state like BN running statistics.
template <typename T>
struct ParamEntry {
    std::string name;
    Var<T> node;
    bool trainable = true;
};

}  // namespace skelact
