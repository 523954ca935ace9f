#include "gaussq/output.hpp"

#include <sstream>

namespace gaussq {

std::string csv_header() {
  return "m,pbar,f,h,class,A0,A1,conductor,discriminant,x_minus_status";
}

std::string to_csv_row(const ClassificationRecord& r) {
  std::ostringstream os;
  os << r.m << ',' << r.pbar << ',' << r.f << ',' << r.h << ',' << to_string(r.cls) << ',';
  if (r.quad) {
    os << r.quad->a0 << ',' << r.quad->a1 << ',' << r.quad->ann_conductor << ','
       << r.quad->discriminant << ',' << to_string(r.quad->xm);
  } else {
    os << ",,,,";
  }
  return os.str();
}

std::string to_json_line(const ClassificationRecord& r) {
  std::ostringstream os;
  os << "{\"m\":" << r.m << ",\"pbar\":" << r.pbar << ",\"f\":" << r.f << ",\"h\":" << r.h
     << ",\"class\":\"" << to_string(r.cls) << "\"";
  if (r.quad) {
    os << ",\"A0\":" << r.quad->a0 << ",\"A1\":" << r.quad->a1
       << ",\"conductor\":" << r.quad->ann_conductor
       << ",\"discriminant\":" << r.quad->discriminant << ",\"x_minus_status\":\""
       << to_string(r.quad->xm) << "\"";
  } else {
    os << ",\"A0\":null,\"A1\":null,\"conductor\":null,\"discriminant\":null,"
          "\"x_minus_status\":null";
  }
  os << "}";
  return os.str();
}

} // namespace gaussq
