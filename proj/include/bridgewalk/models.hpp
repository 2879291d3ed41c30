#pragma once

// Name-based dispatch over the built-in graph models.

#include "bridgewalk/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bridgewalk {

inline const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = {"z1",
                                                   "z2",
                                                   "z3",
                                                   "t3",
                                                   "gp",
                                                   "honeycomb"};
    return names;
}

// Calls f with the named model instance.  All instantiations of f must agree
// on the return type.
template <class F>
decltype(auto) with_model(const std::string& name, F&& f) {
    if (name == "z1") return f(LatticeModel(1));
    if (name == "z2") return f(LatticeModel(2));
    if (name == "z3") return f(LatticeModel(3));
    if (name == "t3") return f(Tree3Model{});
    if (name == "gp") return f(GrandparentModel{});
    if (name == "honeycomb") return f(HoneycombModel{});
    throw std::invalid_argument("unknown graph model: " + name);
}

}  // namespace bridgewalk
