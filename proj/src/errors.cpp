#include "comprelie/errors.hpp"

#include <cstdlib>

namespace comprelie {

namespace {

int& limit_slot() {
    static int limit = [] {
        if (const char* env = std::getenv("COMPRELIE_MAXDEG")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 7;
    }();
    return limit;
}

}  // namespace

int degree_limit() { return limit_slot(); }

void set_degree_limit(int limit) { limit_slot() = limit; }

void check_degree(int degree, const std::string& what) {
    if (degree > degree_limit()) {
        throw ResourceError(what + ": degree " + std::to_string(degree) + " exceeds the configured bound " +
                            std::to_string(degree_limit()));
    }
}

}  // namespace comprelie
