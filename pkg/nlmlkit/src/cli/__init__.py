"""Command-line interface for nlmlkit"""
