#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fcover/geometry.hpp"

namespace fcover {

struct GadgetInstance;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InstanceKind { Curve, ConvexPolygon };

/// On-disk problem instance. Gadget files also carry point labels, the
/// clause squares and the clause count.
struct Instance {
    InstanceKind kind = InstanceKind::Curve;
    std::vector<Point> target;
    std::vector<Point> points;
    std::optional<double> epsilon;
    std::vector<std::string> labels;  // empty or parallel to points
    std::vector<std::vector<Point>> squares;
    std::optional<std::size_t> clauses;

    PolyCurve target_curve() const;
    ConvexPolygon target_polygon() const;
};

/// Parses and validates a JSON instance. Throws FormatError.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);
/// JSON text; doubles are written with round-trip precision.
std::string write_instance(const Instance& inst);

Instance gadget_to_instance(const GadgetInstance& g);

/// A witness file holds the curve as a vertex list.
std::string write_witness(const PolyCurve& q);
PolyCurve parse_witness(std::string_view json_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace fcover
