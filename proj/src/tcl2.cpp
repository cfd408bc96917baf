// tcl2.cpp (implementation follows)
