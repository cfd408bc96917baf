// system.cpp (implementation follows)
