#include "axiswalk/functional.hpp"

namespace axiswalk {

FunctionalList builtin_functionals() {
    FunctionalList fs;
    fs.push_back(std::make_unique<AxisLocalTime>());
    fs.push_back(std::make_unique<OriginLocalTime>());
    return fs;
}

FunctionalList clone_functionals(const FunctionalList& fs) {
    FunctionalList out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        out.push_back(f->clone());
    }
    return out;
}

FunctionalList functionals_by_id(const std::vector<std::string>& ids) {
    FunctionalList out;
    for (const auto& id : ids) {
        bool found = false;
        for (auto& f : builtin_functionals()) {
            if (f->id() == id) {
                out.push_back(std::move(f));
                found = true;
                break;
            }
        }
        if (!found) {
            throw PreconditionError("unknown functional: " + id);
        }
    }
    return out;
}

} // namespace axiswalk
