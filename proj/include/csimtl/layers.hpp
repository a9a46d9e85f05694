#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csimtl/errors.hpp"
#include "csimtl/params.hpp"

namespace csimtl {

enum class LayerKind : std::uint8_t {
    Dense,
    Conv2d,      // 3x3, stride 1, zero padding 1 (same spatial dims)
    BatchNorm,   // per channel over [B,C,H,W]
    LeakyRelu,
    Sigmoid,
    Reshape,     // per-sample reshape, batch dim untouched
    SkipSave,    // push current activation
    SkipAdd,     // pop and add (residual connection)
};

struct LayerSpec {
    LayerKind kind;
    std::string name;            // parameter name prefix
    int in_features = 0, out_features = 0;  // dense
    int in_ch = 0, out_ch = 0;              // conv2d; in_ch doubles as batchnorm channels
    float slope = 0.3f;                     // leaky-relu
    std::vector<int> target_dims;           // reshape, per-sample
    bool zero_init = false;                 // start as the zero map (output projection)

    static LayerSpec dense(std::string name, int in, int out, bool zero_init = false) {
        LayerSpec s{LayerKind::Dense, std::move(name)};
        s.in_features = in;
        s.out_features = out;
        s.zero_init = zero_init;
        return s;
    }
    static LayerSpec conv2d(std::string name, int in_ch, int out_ch, bool zero_init = false) {
        LayerSpec s{LayerKind::Conv2d, std::move(name)};
        s.in_ch = in_ch;
        s.out_ch = out_ch;
        s.zero_init = zero_init;
        return s;
    }
    static LayerSpec batchnorm(std::string name, int channels) {
        LayerSpec s{LayerKind::BatchNorm, std::move(name)};
        s.in_ch = channels;
        return s;
    }
    static LayerSpec leaky_relu(float slope = 0.3f) {
        LayerSpec s{LayerKind::LeakyRelu, ""};
        s.slope = slope;
        return s;
    }
    static LayerSpec sigmoid() { return LayerSpec{LayerKind::Sigmoid, ""}; }
    static LayerSpec reshape(std::vector<int> dims) {
        LayerSpec s{LayerKind::Reshape, ""};
        s.target_dims = std::move(dims);
        return s;
    }
    static LayerSpec skip_save() { return LayerSpec{LayerKind::SkipSave, ""}; }
    static LayerSpec skip_add() { return LayerSpec{LayerKind::SkipAdd, ""}; }

    void validate() const;
};

using LayerStack = std::vector<LayerSpec>;

// Appends seeded Glorot-initialized parameters for every parameterized layer
// in the stack. Batch-norm contributes trainable gamma/beta plus non-trainable
// running statistics.
void init_stack_params(const LayerStack& stack, Partition partition, std::uint64_t seed,
                       ParamSet& out);

// Conv kernels are fixed 3x3.
inline constexpr int kConvKernel = 3;

}  // namespace csimtl
