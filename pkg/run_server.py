"""
Simple server runner for the Dihedral K-Ring Auditor API
"""
import uvicorn

from dihedral_kring.config import settings

if __name__ == "__main__":
    print(f"Starting {settings.APP_NAME} server...")
    print(f"Server will be available at: http://{settings.HOST}:{settings.PORT}")
    print(f"API Documentation: http://{settings.HOST}:{settings.PORT}/docs")
    print("\nPress CTRL+C to stop the server\n")

    uvicorn.run(
        "dihedral_kring.service:app",
        host=settings.HOST,
        port=settings.PORT,
        log_level="info"
    )
