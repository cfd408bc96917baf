// heom.cpp (implementation follows)
