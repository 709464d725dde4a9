#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "qtv/frames.hpp"
#include "qtv/partitions.hpp"
#include "qtv/qfield.hpp"
#include "qtv/vertex.hpp"
#include "qtv/wengine.hpp"

namespace qtv {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"shift": s, "num": [[e, re_n, re_d, im_n, im_d], ...], "den": [...]}, exponents ascending.
json qrat_to_json(const QRat& a);
QRat qrat_from_json(const json& j);

/// Descending part list; the empty partition is [].
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json frames_to_json(const VertexFrames& vf);
/// Reads {"legs": [{"w": [x, y], "n": [x, y]}, x3]}; throws ConfigError.
VertexFrames frames_from_json(const json& j);

/// {"frames", "N", "coefficients": [{"legs", "q", "t"?}]} in tri-degree order.
json state_to_json(const TripleState& s, bool with_t);

/// Rows and columns labelled by partitions in enumeration order.
json matrix_to_json(const QMatrix& m, int row_degree, int col_degree);

}  // namespace qtv
