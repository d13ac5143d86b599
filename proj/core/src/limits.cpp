#include <cstdlib>
#include <string>

#include "booltop/errors.hpp"

namespace booltop {

Limits default_limits() {
    Limits l;
    if (const char* env = std::getenv("BOOLTOP_LIMIT")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) {
                l.tensor = v;
                l.elements = v * 16;
                l.diagrams = v * 4;
            }
        } catch (...) {
            // malformed value: keep defaults
        }
    }
    return l;
}

}  // namespace booltop
