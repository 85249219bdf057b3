"""Oak Tree generator (Trees)."""

PARAMS = {
    "size": 1.672,
    "detail": 5,
    "roughness": 0.429,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Oak Tree"
    for key, value in params.items():
        node[key] = value
    return node
