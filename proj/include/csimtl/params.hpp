#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "csimtl/errors.hpp"
#include "csimtl/tensor.hpp"

namespace csimtl {

// Which half of the feedback model owns a parameter.
enum class Partition : std::uint8_t { Encoder = 0, Decoder = 1 };

inline const char* partition_name(Partition p) {
    return p == Partition::Encoder ? "encoder" : "decoder";
}

struct ParamEntry {
    std::string name;
    Tensor value;
    Partition partition = Partition::Encoder;
    bool trainable = true;   // false for batch-norm running statistics
    bool frozen = false;     // set during fine-tuning to pin the encoder

    bool optimizable() const { return trainable && !frozen; }
};

// Ordered name -> tensor map. Iteration order is insertion order, which makes
// every downstream loop (gradients, Adam, serialization) deterministic.
class ParamSet {
public:
    void add(ParamEntry entry) {
        if (index_.count(entry.name))
            throw ConfigError("duplicate parameter name: " + entry.name);
        index_.emplace(entry.name, entries_.size());
        entries_.push_back(std::move(entry));
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const ParamEntry& at(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw MissingParamError("parameter not found: " + name);
        return entries_[it->second];
    }

    ParamEntry& at(const std::string& name) {
        auto it = index_.find(name);
        if (it == index_.end()) throw MissingParamError("parameter not found: " + name);
        return entries_[it->second];
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::vector<ParamEntry>& entries() const { return entries_; }
    std::vector<ParamEntry>& entries() { return entries_; }

    void set_frozen(Partition partition, bool frozen) {
        for (auto& e : entries_)
            if (e.partition == partition) e.frozen = frozen;
    }

    ParamSet subset(Partition partition) const {
        ParamSet out;
        for (const auto& e : entries_)
            if (e.partition == partition) out.add(e);
        return out;
    }

    // Overwrites values of existing entries by name; dims must match.
    void assign_values(const ParamSet& source) {
        for (const auto& s : source.entries()) {
            auto& dst = at(s.name);
            if (dst.value.dims != s.value.dims)
                throw IntegrityError("parameter " + s.name + " dims " +
                                     dims_to_string(s.value.dims) + " do not match " +
                                     dims_to_string(dst.value.dims));
            dst.value = s.value;
        }
    }

    std::int64_t count_trainable(std::optional<Partition> partition = std::nullopt) const {
        std::int64_t n = 0;
        for (const auto& e : entries_)
            if (e.trainable && (!partition || e.partition == *partition)) n += e.value.numel();
        return n;
    }

    bool operator==(const ParamSet& o) const {
        if (entries_.size() != o.entries_.size()) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& a = entries_[i];
            const auto& b = o.entries_[i];
            if (a.name != b.name || a.partition != b.partition || !(a.value == b.value))
                return false;
        }
        return true;
    }

private:
    std::vector<ParamEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace csimtl
