#include <pybind11/pybind11.h>
PYBIND11_MODULE(attnsim_py, m) { m.doc() = "pending"; }
