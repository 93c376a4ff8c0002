#pragma once

// JSON encodings for the core value types. Integers are emitted as decimal
// strings so arbitrary-precision values survive any JSON reader, and term
// lists follow the deterministic map order, so serialization is
// byte-reproducible for equal values.

#include "pdo/diffop.hpp"
#include "pdo/ut_laurent.hpp"

#include <json.hpp>

namespace pdo {

using Json = nlohmann::ordered_json;

// Field access that fails loudly with the missing key's name.
inline const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

Json ut_to_json(const UTLaurent& f);
UTLaurent ut_from_json(const Json& j);

Json op_to_json(const DiffOp& p);
DiffOp op_from_json(const Json& j);

}  // namespace pdo
