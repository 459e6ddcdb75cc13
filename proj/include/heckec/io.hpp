#pragma once

#include <json.hpp>

#include "heckec/cdaha.hpp"
#include "heckec/dahca.hpp"
#include "heckec/dunkl.hpp"
#include "heckec/sdaha.hpp"

namespace heckec {

/// JSON mirrors of the sparse term maps. Rationals are emitted as exact
/// strings ("3/7"), never as floating point.
nlohmann::json toJson(const CycScalar& c);
nlohmann::json toJson(const ParamPoly& p);
nlohmann::json toJson(const DahcaElem& e);
nlohmann::json toJson(const SdahaElem& e);
nlohmann::json toJson(const CdahaElem& e);
nlohmann::json toJson(const DahaElem& e);
nlohmann::json toJson(const TensorSdahaElem& e);
nlohmann::json toJson(const PolyModElem& e, const std::string& varName);

}  // namespace heckec
