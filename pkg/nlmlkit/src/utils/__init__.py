"""Errors and configuration for nlmlkit"""
