// config.cpp (implementation follows)
