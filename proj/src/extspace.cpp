// extspace.cpp (implementation follows)
