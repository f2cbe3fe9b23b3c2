#include "iset/report.hpp"

#include <sstream>

namespace iset {

namespace {

void render_node(const Json& node, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render_node(value, indent + 1, out);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                render_node(value, indent + 1, out);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << node.dump() << "\n";
    }
}

} // namespace

std::string render_text(const Json& node) {
    std::ostringstream out;
    render_node(node, 0, out);
    return out.str();
}

} // namespace iset
