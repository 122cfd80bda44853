"""Core module - exceptions, logging, guards and graph algorithms."""
