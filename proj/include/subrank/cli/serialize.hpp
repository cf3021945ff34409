#pragma once

#include <string>

#include "json.hpp"
#include "subrank/degeneration/certificate.hpp"

namespace subrank::cli {

using nlohmann::json;

// {"shape": [...], "entries": [{"idx": [...], "num": "..", "den": ".."}]}, entries in row-major order.
json tensor_to_json(const tensor::RatTensor& t);
tensor::RatTensor tensor_from_json(const json& j);

// Each matrix entry is {"num_poly": [[deg, num, den], ...], "den_poly": [...]}; zero terms omitted.
json certificate_to_json(const degeneration::Certificate& c);
degeneration::Certificate certificate_from_json(const json& j);

// Both throw InputError on malformed input.
json read_json_file(const std::string& path);
json parse_json(const std::string& text);
std::string dump(const json& j);

}  // namespace subrank::cli
