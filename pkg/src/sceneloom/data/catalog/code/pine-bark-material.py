"""Pine Bark Material generator (Materials)."""

PARAMS = {
    "size": 0.201,
    "detail": 2,
    "roughness": 0.255,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark Material"
    for key, value in params.items():
        node[key] = value
    return node
