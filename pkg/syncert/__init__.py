"""Synchronization certificates and simulation for coupled harmonic oscillator networks."""
