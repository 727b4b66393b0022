#ifndef KERNDICT_JSON_IO_HPP
#define KERNDICT_JSON_IO_HPP

#include <json.hpp>

#include "kerndict/kerndict.hpp"

namespace kerndict::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const DiversityReport<double>& report);
json to_json(const NormBounds<double>& bounds);
json to_json(const BoundCertificate<double>& certificate);
/// Array of certificates, one object each.
json certificates_json(const CertificateSet<double>& set);
json to_json(const EntropyReport<double>& report);
json to_json(const SparsifyTrace<double>& trace);

}  // namespace kerndict::io

#endif  // KERNDICT_JSON_IO_HPP
