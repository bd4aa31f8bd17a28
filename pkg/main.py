import logging
import os

import uvicorn
from dotenv import load_dotenv
from fastapi import FastAPI

from routers import router

load_dotenv()

logger = logging.getLogger(__name__)

app = FastAPI(title='qhermite')

app.include_router(router)


def run():
    host = os.getenv('HERMITE_API_HOST', '127.0.0.1')
    port = int(os.getenv('HERMITE_API_PORT', '8000'))
    logging.basicConfig(level=logging.INFO)
    logger.info('serving on %s:%d', host, port)
    uvicorn.run(app, host=host, port=port)


if __name__ == '__main__':
    run()
