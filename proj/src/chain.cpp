// chain.cpp (implementation follows)
