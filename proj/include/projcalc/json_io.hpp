#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "projcalc/connection.hpp"
#include "projcalc/tensor_field.hpp"

/// JSON formats. Indices in files are 1-based; polynomials are strings in x1..xm and delta.
///   tensor:     {"dim":m,"up":p,"down":q,"weight":"w","components":{"i1,..;j1,..":"poly"}}
///   connection: {"dim":m,"gamma":{"i,j,k":"poly"}}
///   one-form:   {"dim":m,"alpha":["poly",...]}
///   affine map: {"dim":m,"A":[["a11",...],...],"b":["b1",...]}
/// Omitted components are zero. Output is deterministic: keys sorted, zero components dropped.
namespace projcalc::io {

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_file(const std::string& path);

nlohmann::json to_json(const TensorField& t);
TensorField tensor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Connection& c);
/// Fills Γ^i_{kj} from Γ^i_{jk}; both given must agree.
Connection connection_from_json(const nlohmann::json& j);

OneForm one_form_from_json(const nlohmann::json& j, int dim);
AffineMap affine_from_json(const nlohmann::json& j, int dim);

}  // namespace projcalc::io
