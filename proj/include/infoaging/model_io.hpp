#pragma once

#include <string>

#include "infoaging/ar_model.hpp"

namespace infoaging {

// Model file schema (exact field set, unknown fields rejected):
//   {"coeffs": [a_1, ..., a_p], "sigma2_w": r, "sigma2_n": r}
ArModel parse_model_json(const std::string& text);

ArModel load_model_file(const std::string& path);

}  // namespace infoaging
