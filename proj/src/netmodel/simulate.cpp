#include "tnc/netmodel/simulate.hpp"

#include <string>

#include "tnc/error.hpp"

namespace tnc::netmodel {

Series zero_inputs(const Network& net, const FieldRef& field, std::size_t steps) {
    Series s(net.sources.size());
    for (std::size_t i = 0; i < net.sources.size(); ++i)
        s[i].assign(steps, std::vector<Elem>(net.sources[i].processes, field->zero()));
    return s;
}

Series simulate(const Network& net, const LekAssignment& leks, const Series& inputs, long t0, std::size_t steps) {
    if (!net.unit_delay()) throw Error(Errc::InvalidArgument, "simulate needs a unit-delay network");
    if (inputs.size() != net.sources.size())
        throw Error(Errc::InvalidArgument, "expected inputs for " + std::to_string(net.sources.size()) + " sources");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() > steps)
            throw Error(Errc::InvalidArgument, "inputs extend past the simulated window");
        for (const auto& x : inputs[i])
            if (x.size() != net.sources[i].processes)
                throw Error(Errc::InvalidArgument, "source " + std::to_string(i) + " symbol vector has wrong length");
    }
    const FieldRef& f = leks.field();
    const galois::Field& F = *f;
    const std::size_t E = net.edges.size(), mu = net.mu();

    Series out(net.sinks.size());
    for (std::size_t j = 0; j < net.sinks.size(); ++j) out[j].reserve(steps);

    std::vector<Elem> z(E, F.zero()), x(mu), next(E);
    for (std::size_t s = 0; s < steps; ++s) {
        const Kernels& k = leks.at(t0 + static_cast<long>(s));
        // Y(t) = B Z(t)
        for (std::size_t j = 0; j < net.sinks.size(); ++j) {
            const std::size_t off = net.sink_offset(j);
            std::vector<Elem> y(net.sinks[j].outputs, F.zero());
            for (std::size_t r = 0; r < y.size(); ++r)
                for (std::size_t e = 0; e < E; ++e) y[r] = F.add(y[r], F.mul(k.B(off + r, e), z[e]));
            out[j].push_back(std::move(y));
        }
        for (std::size_t i = 0, l = 0; i < net.sources.size(); ++i)
            for (std::size_t p = 0; p < net.sources[i].processes; ++p, ++l)
                x[l] = s < inputs[i].size() ? inputs[i][s][p] : F.zero();
        // Z(t+1) = A^T X(t) + K^T Z(t)
        for (std::size_t e = 0; e < E; ++e) {
            Elem acc = F.zero();
            for (std::size_t l = 0; l < mu; ++l) acc = F.add(acc, F.mul(k.A(l, e), x[l]));
            for (std::size_t a = 0; a < E; ++a) acc = F.add(acc, F.mul(k.K(a, e), z[a]));
            next[e] = acc;
        }
        z.swap(next);
    }
    return out;
}

}  // namespace tnc::netmodel
