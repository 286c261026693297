"""Data models for nlmlkit"""
