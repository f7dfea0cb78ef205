#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tnc/error.hpp"
#include "tnc/fixtures/fixtures.hpp"
#include "tnc/netmodel/leks.hpp"
#include "tnc/netmodel/simulate.hpp"

namespace tnc::cli {

using Json = nlohmann::ordered_json;
using galois::Elem;
using galois::FieldRef;

/// Every schema violation found in a document, each prefixed with its JSON
/// pointer.
class SchemaViolations : public Error {
public:
    explicit SchemaViolations(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Throws ParseError naming line and column.
Json parse_text(const std::string& text);
/// Throws InvalidArgument when the file cannot be read.
Json read_file(const std::string& path);

Json field_to_json(const galois::Field& f);
/// Coefficients, lowest degree first.
Json elem_to_json(const galois::Field& f, Elem e);
Json poly_to_json(const galois::Poly& p);
Json leks_to_json(const netmodel::Network& net, const netmodel::LekAssignment& leks);
Json network_to_json(const netmodel::Network& net, const FieldRef& field,
                     const std::optional<netmodel::LekAssignment>& leks);

struct InputBlock {
    long t0 = 0;
    std::size_t steps = 0;
    netmodel::Series series;
};

/// Network file: topology, optional field, kernels, alignment block length
/// and simulation inputs.
struct NetworkDoc {
    netmodel::Network net;
    FieldRef field;  // null when absent
    std::optional<netmodel::LekAssignment> leks;
    std::optional<std::size_t> n;
    std::optional<InputBlock> inputs;
};

/// Parses and validates a network document; structural network errors
/// (CycleDetected, ...) propagate after the schema checks pass.
NetworkDoc parse_network_doc(const Json& j);

/// Transfer-matrix file: a raw transfer matrix given row by row per sink.
struct TransferDoc {
    fixtures::TransferFixture fixture;
    FieldRef field;
};

bool is_transfer_doc(const Json& j);
TransferDoc parse_transfer_doc(const Json& j);
Json transfer_doc_to_json(const fixtures::TransferFixture& fx);

}  // namespace tnc::cli
