#ifndef NBD_GENERATORS_HPP
#define NBD_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nbd/graph.hpp"

namespace nbd {

/// Raised when a generator cannot produce a graph (e.g. the regular-graph
/// pairing exhausts its restart budget).
class GenerationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelFamily { er, ws, rr, ba };

std::string to_string(ModelFamily family);
ModelFamily model_family_from_string(const std::string& name);

/// Parameters of one synthetic-graph draw. Only the fields of the selected
/// family are read.
struct ModelSpec {
    ModelFamily family = ModelFamily::er;
    int n = 0;
    double p = 0.0;    // ER: connection probability; WS: rewiring probability
    int k = 0;         // WS: nearest-neighbor ring parameter
    int d = 0;         // RR: degree
    int m_attach = 0;  // BA: edges per arriving vertex
    std::uint64_t seed = 0;

    ModelSpec with_n(int new_n) const {
        ModelSpec s = *this;
        s.n = new_n;
        return s;
    }
    ModelSpec with_seed(std::uint64_t new_seed) const {
        ModelSpec s = *this;
        s.seed = new_seed;
        return s;
    }
};

/// Throws std::invalid_argument unless the family preconditions hold:
/// ER 0<=p<=1; WS 2<=k<=n-1 and 0<=p<=1; RR 0<=d<n and n*d even;
/// BA 1<=m_attach<n.
void validate(const ModelSpec& spec);

// Configuration-model pairing is restarted from scratch whenever the drawn
// pairing has a self-loop or a parallel edge, which keeps accepted graphs
// uniform over simple d-regular realizations. The acceptance rate is about
// exp((1-d^2)/4), so d=5 needs ~400 restarts on average and a budget of
// 1000 would fail roughly 8% of all calls.
inline constexpr int kRegularRestartCap = 50000;

/// Draws one graph. Pure function of `spec`: equal specs give bit-identical
/// graphs on every run and thread count.
Graph generate(const ModelSpec& spec, int rr_restart_cap = kRegularRestartCap);

}  // namespace nbd

#endif  // NBD_GENERATORS_HPP
