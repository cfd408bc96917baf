// modes.cpp (implementation follows)
